#pragma once

#include <cstdint>
#include <vector>

#include "parasym/coset_enumeration.hpp"
#include "parasym/families.hpp"
#include "parasym/presentation.hpp"
#include "parasym/report.hpp"

namespace parasym {

/// A letter (ij)_a^{±1} or h_ij(a)^{±1} with 1-based indices and an opaque label.
template <typename Label>
struct IndexedLetter {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  Label label{};
  bool inverse = false;

  friend bool operator==(const IndexedLetter&, const IndexedLetter&) = default;
};

/// Running permutation σ_k = (i_1 j_1) ... (i_{k-1} j_{k-1}) as a point map,
/// σ_k(x) = (i_1 j_1)((i_2 j_2)(... (i_{k-1} j_{k-1})(x))).
class TauState {
 public:
  explicit TauState(std::uint32_t n);

  /// Index pair of the h-letter for the next input letter; advances σ.
  std::pair<std::uint32_t, std::uint32_t> next(std::uint32_t i, std::uint32_t j, bool inverse);
  /// True when σ is the identity, i.e. the word read so far lies in HS_n(G).
  bool trivial() const;
  const std::vector<std::uint32_t>& sigma() const noexcept { return sigma_; }

 private:
  std::vector<std::uint32_t> sigma_;  // 1-based, sigma_[0] unused
};

/// τ: letter k, (i_k j_k)_{a_k}, becomes h_{σ_k(i_k), σ_k(j_k)}(a_k). An inverse
/// letter (ij)_a^-1 becomes h_{σ_{k+1}(i), σ_{k+1}(j)}(a)^-1, which equals the
/// image of (ij)_a modulo h_ij(a) h_ji(a) = 1 and keeps τ compatible with free
/// cancellation.
template <typename Label>
std::vector<IndexedLetter<Label>> rewrite_tau(const std::vector<IndexedLetter<Label>>& word, std::uint32_t n) {
  TauState state(n);
  std::vector<IndexedLetter<Label>> out;
  out.reserve(word.size());
  for (const auto& l : word) {
    auto [p, q] = state.next(l.i, l.j, l.inverse);
    out.push_back({p, q, l.label, l.inverse});
  }
  return out;
}

/// τ on words of a transposition-type presentation, producing words over an
/// h-alphabet presentation with the same n and G.
Word rewrite_tau(const Presentation& source, const Presentation& h_alphabet, const Word& w);

/// Words in h_ij(a) evaluated in S_n(G) through h_ij(a) = (ij)_a (ij)_e.
Word embed_h_word(const Presentation& h_alphabet, const Presentation& target, const Word& w);

struct TauCheck {
  CheckResult multiplicative;   // τ(U1 U2) = τ(U1) τ(U2) letterwise
  CheckResult evaluation;       // τ(U) and U define the same element
  CheckResult free_reduction;   // freely equal inputs give freely equal outputs
  CheckResult base_case;        // τ((ij)_a (ij)_e) = h_ij(a) h_ji(e) = h_ij(a)
  std::size_t samples = 0;

  bool passed() const {
    return multiplicative.passed() && evaluation.passed() && free_reduction.passed() && base_case.passed();
  }
};

/// Property checks on `sample_count` seeded random words whose underlying
/// permutation is trivial.
TauCheck verify_tau_properties(std::uint32_t n, GroupPtr g, std::size_t sample_count, std::uint64_t seed = 1,
                               const EnumerationOptions& options = {});

}  // namespace parasym
