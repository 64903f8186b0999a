#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace parasym {

/// Permutation of {0, ..., n-1}. Products apply the left factor first:
/// (p * q)(i) = q(p(i)). Points are displayed 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::uint32_t degree);
  /// Swaps 0-based points i and j.
  static Permutation transposition(std::uint32_t degree, std::uint32_t i, std::uint32_t j);
  /// All n! permutations in lexicographic order of image vectors.
  static std::vector<Permutation> all(std::uint32_t degree);

  std::uint32_t degree() const noexcept { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::size_t cycle_count() const;
  /// Cycles of length >= 2, each starting at its smallest point.
  std::vector<std::vector<std::uint32_t>> cycles() const;
  /// Transpositions (a, b), a < b, whose left-to-right product is *this.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> transposition_factorization() const;

  std::string to_string() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

}  // namespace parasym

template <>
struct std::hash<parasym::Permutation> {
  std::size_t operator()(const parasym::Permutation& p) const noexcept;
};
