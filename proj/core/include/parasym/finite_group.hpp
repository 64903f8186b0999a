#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace parasym {

using Element = std::uint32_t;

/// A finite group stored as a full multiplication table. Element 0 is the
/// identity; the table is validated (Latin square, associativity) on
/// construction so every FiniteGroup value is a genuine group.
class FiniteGroup {
 public:
  /// `table[r * order + c]` is the index of element r times element c.
  FiniteGroup(std::uint32_t order, std::vector<Element> table,
              std::vector<std::string> names = {});

  std::uint32_t order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }
  Element multiply(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverses_[a]; }
  /// x^y = y^-1 x y
  Element conjugate(Element x, Element y) const {
    return multiply(multiply(inverse(y), x), y);
  }
  /// [x, y] = x^-1 y^-1 x y
  Element commutator(Element x, Element y) const {
    return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
  }
  Element power(Element a, std::int64_t k) const;
  std::uint32_t element_order(Element a) const;

  bool is_abelian() const;
  const std::vector<Element>& table() const noexcept { return table_; }

  /// Display name; falls back to "e" / "g<k>" when no names were supplied.
  std::string name(Element a) const;
  bool has_names() const noexcept { return !names_.empty(); }
  /// Accepts "e", "g<k>" or one of the supplied names.
  std::optional<Element> lookup(std::string_view label) const;

  /// Elements of the derived subgroup [G, G], sorted.
  std::vector<Element> derived_subgroup() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  std::uint32_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::string> names_;
};

/// Builtin group by name: c1/trivial, c2, c3, c4, c6, klein, c4xc2, c2cubed,
/// s3, d4, q8, a4, or a product "AxB" of builtins.
FiniteGroup make_builtin(std::string_view name);

/// Direct product with (a, b) encoded as a * |B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

FiniteGroup cyclic_group(std::uint32_t m);

/// Closes a set of permutations (given as image vectors on 0..d-1) and returns
/// the generated group with the identity at index 0.
FiniteGroup group_from_permutations(const std::vector<std::vector<std::uint32_t>>& gens);

/// Multiplication-table text format: order, then `order` rows, then an
/// optional "names: ..." line.
FiniteGroup parse_multiplication_table(std::string_view text);
std::string format_multiplication_table(const FiniteGroup& g);

}  // namespace parasym
