#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "parasym/finite_group.hpp"

namespace parasym {

/// Invariant factors d1 | d2 | ... | dk of a finitely generated abelian
/// group. Finite factors are >= 2; a trailing 0 stands for a copy of Z.
/// The empty list is the trivial group.
struct AbelianInvariants {
  std::vector<std::uint64_t> factors;

  bool is_finite() const;
  /// Product of the factors; 0 if the group is infinite.
  std::uint64_t order() const;
  std::string to_string() const;

  /// Normalizes an arbitrary list of cyclic orders (0 = Z, 1 dropped) into
  /// invariant-factor form.
  static AbelianInvariants from_cyclic_orders(std::vector<std::uint64_t> orders);

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Invariants of a finite abelian group from the orders of its elements.
/// The multiset of element orders determines a finite abelian group.
AbelianInvariants invariants_from_element_orders(const std::vector<std::uint64_t>& orders);

/// G / [G, G] of a multiplication-table group.
AbelianInvariants abelianization(const FiniteGroup& g);

/// Invariants of a subgroup given as an element list closed under `g`'s law.
/// Throws kNotClosed or kNotAbelian when the precondition fails.
AbelianInvariants abelian_invariants_of_subgroup(const FiniteGroup& g,
                                                 const std::vector<Element>& elements);

/// Smith normal form of an integer matrix (rows x cols), computed with
/// arbitrary-precision arithmetic. Returns the abelian group Z^cols / rowspace.
AbelianInvariants abelian_group_of_relation_matrix(
    std::size_t cols, const std::vector<std::vector<std::pair<std::size_t, std::int64_t>>>& rows);

}  // namespace parasym
