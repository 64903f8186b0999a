#include "parasym/rewriting.hpp"

#include <random>

#include "parasym/error.hpp"

namespace parasym {

TauState::TauState(std::uint32_t n) : sigma_(n + 1) {
  for (std::uint32_t x = 0; x <= n; ++x) sigma_[x] = x;
}

std::pair<std::uint32_t, std::uint32_t> TauState::next(std::uint32_t i, std::uint32_t j, bool inverse) {
  const std::uint32_t n = static_cast<std::uint32_t>(sigma_.size()) - 1;
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw Error(ErrorKind::kUnsupportedSymbol, "invalid-symbol: transposition (" + std::to_string(i) + "," +
                                                   std::to_string(j) + ") for n=" + std::to_string(n));
  std::pair<std::uint32_t, std::uint32_t> out{sigma_[i], sigma_[j]};
  std::swap(sigma_[i], sigma_[j]);  // σ_{k+1} = σ_k ∘ (ij)
  if (inverse) std::swap(out.first, out.second);
  return out;
}

bool TauState::trivial() const {
  for (std::uint32_t x = 0; x < sigma_.size(); ++x)
    if (sigma_[x] != x) return false;
  return true;
}

Word rewrite_tau(const Presentation& source, const Presentation& h_alphabet, const Word& w) {
  source.check_word(w);
  TauState state(source.meta().n);
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    const auto& s = source.symbol(l.gen);
    if (s.kind != SymbolKind::kTransposition)
      throw Error(ErrorKind::kUnsupportedSymbol, "invalid-symbol: τ reads (ij)_a letters only");
    auto [p, q] = state.next(s.i, s.j, l.inverse);
    out.push_back(h_alphabet.letter(GeneratorSymbol::h(p, q, s.a), l.inverse));
  }
  return out;
}

Word embed_h_word(const Presentation& h_alphabet, const Presentation& target, const Word& w) {
  Word out;
  for (const Letter& l : w) {
    const auto& s = h_alphabet.symbol(l.gen);
    const Letter x = target.letter(GeneratorSymbol::transposition(s.i, s.j, s.a));
    const Letter e = target.letter(GeneratorSymbol::transposition(s.i, s.j, 0));
    if (l.inverse) {
      out.push_back(e.inverted());
      out.push_back(x.inverted());
    } else {
      out.push_back(x);
      out.push_back(e);
    }
  }
  return out;
}

namespace {

class WordSampler {
 public:
  WordSampler(const Presentation& p, std::uint64_t seed) : p_(p), rng_(seed) {}

  Letter random_letter() {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(p_.generator_count()) - 1);
    return {pick(rng_), coin()};
  }

  /// A random word followed by transpositions that undo its permutation.
  Word trivial_permutation_word() {
    const std::uint32_t n = p_.meta().n;
    std::uniform_int_distribution<int> len(0, 8);
    Word w;
    TauState state(n);
    for (int k = len(rng_); k > 0; --k) {
      Letter l = random_letter();
      const auto& s = p_.symbol(l.gen);
      state.next(s.i, s.j, l.inverse);
      w.push_back(l);
    }
    std::uniform_int_distribution<Element> label(0, p_.group()->order() - 1);
    for (std::uint32_t x = 1; x <= n; ++x) {
      while (state.sigma()[x] != x) {
        std::uint32_t y = x + 1;
        while (state.sigma()[y] != x) ++y;
        const bool flip = coin();
        const std::uint32_t i = flip ? y : x, j = flip ? x : y;
        const bool iv = coin();
        state.next(i, j, iv);
        w.push_back(p_.letter(GeneratorSymbol::transposition(i, j, label(rng_)), iv));
      }
    }
    return w;
  }

  /// w with a cancelling pair x x^-1 inserted at a random position.
  Word with_cancelling_pair(const Word& w) {
    std::uniform_int_distribution<std::size_t> pos(0, w.size());
    const std::size_t at = pos(rng_);
    const Letter x = random_letter();
    Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(at));
    out.push_back(x);
    out.push_back(x.inverted());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(at), w.end());
    return out;
  }

 private:
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }

  const Presentation& p_;
  std::mt19937_64 rng_;
};

}  // namespace

TauCheck verify_tau_properties(std::uint32_t n, GroupPtr g, std::size_t sample_count, std::uint64_t seed,
                               const EnumerationOptions& options) {
  const Presentation tr = transposition_presentation(n, g);
  const Presentation hs = hs_presentation(n, g);
  TauCheck c;
  auto eg = enumerate_group(tr, options);
  auto ehs = enumerate_group(hs, options);
  if (!eg || !ehs) {
    c.multiplicative = c.evaluation = c.free_reduction = c.base_case = CheckResult::timeout("enumeration capacity");
    return c;
  }
  WordSampler sampler(tr, seed);
  auto show = [&](const Word& w) { return tr.word_to_string(w); };
  for (std::size_t k = 0; k < sample_count; ++k) {
    const Word u1 = sampler.trivial_permutation_word();
    const Word u2 = sampler.trivial_permutation_word();
    const Word t1 = rewrite_tau(tr, hs, u1);
    if (c.multiplicative.passed() && rewrite_tau(tr, hs, concat(u1, u2)) != concat(t1, rewrite_tau(tr, hs, u2)))
      c.multiplicative = CheckResult::fail("U1=" + show(u1) + " U2=" + show(u2));
    if (c.evaluation.passed() && eg->element(embed_h_word(hs, tr, t1)) != eg->element(u1))
      c.evaluation = CheckResult::fail("U=" + show(u1));
    const Word star = sampler.with_cancelling_pair(u1);
    if (c.free_reduction.passed() &&
        (free_reduce(rewrite_tau(tr, hs, star)) != free_reduce(t1) ||
         free_reduce(rewrite_tau(tr, hs, free_reduce(u1))) != free_reduce(t1)))
      c.free_reduction = CheckResult::fail("U=" + show(u1) + " U*=" + show(star));
  }
  c.samples = sample_count;
  for (const auto& s : tr.generators()) {
    const Word w{tr.letter(s), tr.letter(GeneratorSymbol::transposition(s.i, s.j, 0))};
    const Word t = rewrite_tau(tr, hs, w);
    const Letter h = hs.letter(GeneratorSymbol::h(s.i, s.j, s.a));
    const Word expected{h, hs.letter(GeneratorSymbol::h(s.j, s.i, 0))};
    if (t != expected || ehs->element(t) != ehs->generator(h.gen) || eg->element(embed_h_word(hs, tr, {h})) != eg->element(w)) {
      c.base_case = CheckResult::fail("(ij)_a=" + tr.symbol_name(tr.id(s)));
      break;
    }
  }
  return c;
}

}  // namespace parasym
