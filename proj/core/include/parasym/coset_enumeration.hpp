#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parasym/permutation.hpp"
#include "parasym/presentation.hpp"

namespace parasym {

enum class EnumerationStatus { kComplete, kCapacityExceeded };

struct EnumerationOptions {
  /// Largest number of coset indices the table may hold at once.
  std::uint64_t max_cosets = 1'000'000;
  /// Hard ceiling on table memory; the effective capacity is the smaller of
  /// the two limits.
  std::uint64_t memory_limit_bytes = 1ULL << 30;
};

/// Result of a coset enumeration. Complete tables are standardized: cosets
/// are numbered in breadth-first order from coset 0 (the subgroup), so equal
/// inputs give byte-identical tables regardless of the capacity used.
class CosetTable {
 public:
  static constexpr std::uint32_t kUndefined = 0xffffffffu;

  CosetTable() = default;
  CosetTable(std::uint32_t generator_count, std::uint32_t coset_count,
             std::vector<std::uint32_t> rows, EnumerationStatus status);

  EnumerationStatus status() const noexcept { return status_; }
  bool complete() const noexcept { return status_ == EnumerationStatus::kComplete; }
  std::uint32_t generator_count() const noexcept { return generators_; }
  /// Index of the subgroup when complete; live cosets at abort otherwise.
  std::uint32_t coset_count() const noexcept { return cosets_; }

  std::uint32_t image(std::uint32_t coset, Letter l) const {
    return rows_[static_cast<std::size_t>(coset) * 2 * generators_ + 2 * l.gen + (l.inverse ? 1 : 0)];
  }
  /// Follows `w` from `coset`; kUndefined if the path leaves the table.
  std::uint32_t trace(std::uint32_t coset, const Word& w) const;
  const std::vector<std::uint32_t>& rows() const noexcept { return rows_; }

  /// One line per coset: images under g0, g0^-1, g1, g1^-1, ...
  std::string dump() const;

  /// Statistics from the run that produced the table.
  std::uint64_t total_defined = 0;
  std::uint64_t max_live = 0;

 private:
  std::uint32_t generators_ = 0;
  std::uint32_t cosets_ = 0;
  std::vector<std::uint32_t> rows_;
  EnumerationStatus status_ = EnumerationStatus::kCapacityExceeded;
};

/// Hasselgrove-Leech-Trotter coset enumeration of the subgroup generated by
/// `subgroup` in the group presented by `p`. When the table fills up, dead
/// cosets are compacted away and a lookahead pass (relator scans without new
/// definitions) is tried before giving up with kCapacityExceeded.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup = {},
                        const EnumerationOptions& options = {});

/// Permutation action of each generator on the cosets of a complete table.
struct PermutationRep {
  std::uint32_t degree = 0;
  std::vector<Permutation> images;
};

/// Builds the representation and re-checks that every relator of `p` acts
/// trivially. Throws kIncompleteTable / kMalformedWord on failure.
PermutationRep permutation_rep(const CosetTable& t, const Presentation& p);
Permutation evaluate_word(const PermutationRep& rep, const Word& w);

/// The group realized by a complete regular (trivial-subgroup) coset table.
/// Element x is identified with the coset 0 * x, so words are compared by
/// tracing them from coset 0.
class EnumeratedGroup {
 public:
  explicit EnumeratedGroup(CosetTable table);

  std::uint32_t order() const noexcept { return table_.coset_count(); }
  const CosetTable& table() const noexcept { return table_; }
  std::uint32_t generator_count() const noexcept { return table_.generator_count(); }

  std::uint32_t element(const Word& w) const { return table_.trace(0, w); }
  std::uint32_t act(std::uint32_t x, const Word& w) const { return table_.trace(x, w); }
  std::uint32_t act(std::uint32_t x, Letter l) const { return table_.image(x, l); }
  std::uint32_t generator(std::uint32_t g) const { return table_.image(0, gen(g)); }

  /// A word for x, read off a breadth-first spanning tree.
  const Word& word_of(std::uint32_t x) const { return words_[x]; }
  std::uint32_t multiply(std::uint32_t x, std::uint32_t y) const { return table_.trace(x, words_[y]); }
  std::uint32_t inverse(std::uint32_t x) const { return table_.trace(0, inverse_word(words_[x])); }
  std::uint32_t conjugate(std::uint32_t x, std::uint32_t y) const {
    return multiply(multiply(inverse(y), x), y);
  }
  std::uint64_t element_order(std::uint32_t x) const;

 private:
  CosetTable table_;
  std::vector<Word> words_;
};

/// Enumerates `p` over the trivial subgroup; nullopt if the capacity is hit.
std::optional<EnumeratedGroup> enumerate_group(const Presentation& p, const EnumerationOptions& options = {});

enum class Consequence { kYes, kNo, kTimeout };

struct ConsequenceResult {
  Consequence verdict = Consequence::kTimeout;
  /// For kNo: the coset that w moves coset 0 to.
  std::optional<std::uint32_t> witness;
};

/// When the full enumeration hits the cap, w is also tested in the
/// elementary abelian 2- and 3-quotients; surviving there proves kNo (the
/// witness is then a coset of the quotient table).
ConsequenceResult is_consequence(const Presentation& p, const Word& w, const EnumerationOptions& options = {});
ConsequenceResult is_consequence(const EnumeratedGroup& g, const Word& w);

const char* to_string(Consequence c);

}  // namespace parasym
