#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "parasym/finite_group.hpp"
#include "parasym/permutation.hpp"

namespace parasym {

/// Element of G^n; entries are element indices of the ambient group.
using Tuple = std::vector<Element>;

Tuple identity_tuple(std::uint32_t n);
Tuple tuple_multiply(const FiniteGroup& g, const Tuple& a, const Tuple& b);
Tuple tuple_inverse(const FiniteGroup& g, const Tuple& a);
/// Entry x at (0-based) position i, identity elsewhere.
Tuple unit_tuple(std::uint32_t n, std::uint32_t i, Element x);

/// Index of a tuple in 0..|G|^n - 1 (position 0 most significant) and back.
std::uint64_t tuple_index(const FiniteGroup& g, const Tuple& t);
Tuple tuple_from_index(const FiniteGroup& g, std::uint32_t n, std::uint64_t index);

/// d_ij(a): a at position i, a^-1 at position j (1-based i != j).
Tuple d_vector(const FiniteGroup& g, std::uint32_t n, std::uint32_t i, std::uint32_t j, Element a);

struct WreathElement {
  Tuple vector;
  Permutation perm;

  friend auto operator<=>(const WreathElement&, const WreathElement&) = default;
  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// How S_n acts on G^n.
///
/// kRight is the right action (v^s)_{s(i)} = v_i, which is the one
/// compatible with left-first permutation products. kFlipped uses
/// (v^s)_i = v_{s(i)}; it is not an action for n >= 3 and exists so tests
/// can demonstrate that the certification checks reject it.
enum class TupleAction { kRight, kFlipped };

/// G wr S_n = G^n x| S_n. A pair (v, s) stands for the product v * s, so
/// (v, s)(w, t) = (v * w^(s^-1), s t).
class WreathProduct {
 public:
  WreathProduct(const FiniteGroup& g, std::uint32_t n, TupleAction action = TupleAction::kRight);

  const FiniteGroup& base() const noexcept { return *group_; }
  std::uint32_t degree() const noexcept { return n_; }
  std::uint64_t order() const;

  Tuple act(const Tuple& v, const Permutation& s) const;

  WreathElement identity() const;
  WreathElement multiply(const WreathElement& x, const WreathElement& y) const;
  WreathElement inverse(const WreathElement& x) const;
  /// x^y = y^-1 x y
  WreathElement conjugate(const WreathElement& x, const WreathElement& y) const;
  bool is_identity(const WreathElement& x) const;

  /// s^g for s in S_n, g in G^n, i.e. (g, 1)^-1 (1, s) (g, 1).
  WreathElement twisted(const Permutation& s, const Tuple& g) const;

  /// Generators (x[i], 1) for x in G, and (1, (i i+1)).
  std::vector<WreathElement> generators() const;

 private:
  void check(const WreathElement& x) const;

  const FiniteGroup* group_;
  std::uint32_t n_;
  TupleAction action_;
};

}  // namespace parasym

template <>
struct std::hash<parasym::WreathElement> {
  std::size_t operator()(const parasym::WreathElement& x) const noexcept;
};
