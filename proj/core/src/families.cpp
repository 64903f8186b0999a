#include "parasym/families.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "parasym/error.hpp"
#include "parasym/wreath.hpp"

namespace parasym {

namespace {

using Sym = GeneratorSymbol;

void require_n(std::uint32_t n, std::uint32_t min, const char* family) {
  if (n < min)
    throw Error(ErrorKind::kOutOfRange, std::string("n-too-small: ") + family + " needs n >= " +
                                            std::to_string(min));
}

// Generators are sorted so that every builder is deterministic.
Presentation build(Presentation::Meta meta, GroupPtr g, std::vector<Sym> gens,
                   const std::function<std::vector<Word>(const Presentation&)>& relators) {
  std::sort(gens.begin(), gens.end());
  Presentation bare(meta, g, gens, {});
  return Presentation(meta, g, gens, relators(bare));
}

std::vector<std::uint32_t> points(std::uint32_t n) {
  std::vector<std::uint32_t> p(n);
  for (std::uint32_t k = 0; k < n; ++k) p[k] = k + 1;
  return p;
}

}  // namespace

Presentation coxeter_presentation(std::uint32_t n, GroupPtr g) {
  require_n(n, 2, "coxeter");
  const FiniteGroup& G = *g;
  std::vector<Sym> gens;
  for (std::uint32_t i = 1; i < n; ++i)
    for (Element a = 0; a < G.order(); ++a) gens.push_back(Sym::coxeter(i, a));
  return build({"coxeter", n, 0}, g, gens, [&](const Presentation& p) {
    auto s = [&](std::uint32_t i, Element a, bool inv = false) { return p.letter(Sym::coxeter(i, a), inv); };
    std::vector<Word> rels;
    for (std::uint32_t i = 1; i < n; ++i)
      for (Element a = 0; a < G.order(); ++a) rels.push_back({s(i, a), s(i, a)});
    // s_i(a) s_{i+1}(b) s_i(c) = s_{i+1}(a^-1 c b) s_i(a) s_{i+1}(b)
    for (std::uint32_t i = 1; i + 1 < n; ++i)
      for (Element a = 0; a < G.order(); ++a)
        for (Element b = 0; b < G.order(); ++b)
          for (Element c = 0; c < G.order(); ++c) {
            Element x = G.multiply(G.multiply(G.inverse(a), c), b);
            rels.push_back({s(i, a), s(i + 1, b), s(i, c), s(i + 1, b, true), s(i, a, true),
                            s(i + 1, x, true)});
          }
    for (std::uint32_t i = 1; i < n; ++i)
      for (std::uint32_t j = i + 2; j < n; ++j)
        for (Element a = 0; a < G.order(); ++a)
          for (Element b = 0; b < G.order(); ++b)
            rels.push_back(commutator_word({s(i, a)}, {s(j, b)}));
    return rels;
  });
}

namespace {

// (ij)_a^2, (ij)_a^{(jk)_b} = (ik)_{ab}, commuting disjoint pairs and
// (ij)_a = (ji)_{a^-1}, over a lookup `t(i, j, a)`; with trivial G this is
// the reflection presentation of S_n.
void reflection_type_relators(std::uint32_t n, const FiniteGroup& G,
                              const std::function<Letter(std::uint32_t, std::uint32_t, Element, bool)>& t,
                              std::vector<Word>& rels) {
  const auto pts = points(n);
  for (auto i : pts)
    for (auto j : pts) {
      if (i == j) continue;
      for (Element a = 0; a < G.order(); ++a) rels.push_back({t(i, j, a, false), t(i, j, a, false)});
    }
  // (ij)_a^{(jk)_b} = (ik)_{ab}
  for (auto i : pts)
    for (auto j : pts)
      for (auto k : pts) {
        if (i == j || j == k || i == k) continue;
        for (Element a = 0; a < G.order(); ++a)
          for (Element b = 0; b < G.order(); ++b)
            rels.push_back({t(j, k, b, true), t(i, j, a, false), t(j, k, b, false),
                            t(i, k, G.multiply(a, b), true)});
      }
  for (auto i : pts)
    for (auto j : pts)
      for (auto k : pts)
        for (auto l : pts) {
          if (i == j || k == l || i == k || i == l || j == k || j == l) continue;
          for (Element a = 0; a < G.order(); ++a)
            for (Element b = 0; b < G.order(); ++b)
              rels.push_back(commutator_word({t(i, j, a, false)}, {t(k, l, b, false)}));
        }
  // (ij)_a = (ji)_{a^-1}
  for (auto i : pts)
    for (auto j : pts) {
      if (i == j) continue;
      for (Element a = 0; a < G.order(); ++a)
        rels.push_back({t(i, j, a, false), t(j, i, G.inverse(a), true)});
    }
}

}  // namespace

Presentation transposition_presentation(std::uint32_t n, GroupPtr g) {
  require_n(n, 3, "transposition");
  const FiniteGroup& G = *g;
  std::vector<Sym> gens;
  for (auto i : points(n))
    for (auto j : points(n))
      if (i != j)
        for (Element a = 0; a < G.order(); ++a) gens.push_back(Sym::transposition(i, j, a));
  return build({"transposition", n, 0}, g, gens, [&](const Presentation& p) {
    std::vector<Word> rels;
    reflection_type_relators(
        n, G,
        [&](std::uint32_t i, std::uint32_t j, Element a, bool iv) {
          return p.letter(Sym::transposition(i, j, a), iv);
        },
        rels);
    return rels;
  });
}

Presentation reflection_presentation_sn(std::uint32_t n) {
  require_n(n, 3, "reflection");
  GroupPtr trivial = share(cyclic_group(1));
  std::vector<Sym> gens;
  for (auto i : points(n))
    for (auto j : points(n))
      if (i != j) gens.push_back(Sym::reflection(i, j));
  return build({"reflection", n, 0}, trivial, gens, [&](const Presentation& p) {
    std::vector<Word> rels;
    reflection_type_relators(
        n, *trivial,
        [&](std::uint32_t i, std::uint32_t j, Element, bool iv) {
          return p.letter(Sym::reflection(i, j), iv);
        },
        rels);
    return rels;
  });
}

Presentation interpolating_presentation(std::uint32_t n, std::uint32_t t, GroupPtr g) {
  require_n(n, 3, "interpolating");
  if (t < 1 || t > n - 1)
    throw Error(ErrorKind::kOutOfRange, "t-out-of-range: need 1 <= t <= n-1");
  const FiniteGroup& G = *g;
  auto ok = [&](std::uint32_t i, std::uint32_t j) { return i < j && j - i <= t; };
  std::vector<Sym> gens;
  for (auto i : points(n))
    for (auto j : points(n))
      if (ok(i, j))
        for (Element a = 0; a < G.order(); ++a) gens.push_back(Sym::transposition(i, j, a));
  return build({"interpolating", n, t}, g, gens, [&](const Presentation& p) {
    auto x = [&](std::uint32_t i, std::uint32_t j, Element a, bool iv = false) {
      return p.letter(Sym::transposition(i, j, a), iv);
    };
    std::vector<Word> rels;
    for (auto i : points(n))
      for (auto j : points(n))
        if (ok(i, j))
          for (Element a = 0; a < G.order(); ++a) rels.push_back({x(i, j, a), x(i, j, a)});
    // (ij)_a^{(jk)_b} = (jk)_{b'}^{(ij)_{a'}} whenever ab = a'b'
    for (auto i : points(n))
      for (auto j : points(n))
        for (auto k : points(n)) {
          if (!ok(i, j) || !ok(j, k)) continue;
          for (Element a = 0; a < G.order(); ++a)
            for (Element b = 0; b < G.order(); ++b)
              for (Element a2 = 0; a2 < G.order(); ++a2) {
                Element b2 = G.multiply(G.inverse(a2), G.multiply(a, b));
                rels.push_back({x(j, k, b, true), x(i, j, a), x(j, k, b), x(i, j, a2, true),
                                x(j, k, b2, true), x(i, j, a2)});
              }
        }
    for (auto i : points(n))
      for (auto j : points(n))
        for (auto k : points(n))
          for (auto l : points(n)) {
            if (!ok(i, j) || !ok(k, l) || i == k || i == l || j == k || j == l) continue;
            for (Element a = 0; a < G.order(); ++a)
              for (Element b = 0; b < G.order(); ++b)
                rels.push_back(commutator_word({x(i, j, a)}, {x(k, l, b)}));
          }
    // (ij)_a^{(jk)_b} = (ik)_{ab}
    for (auto i : points(n))
      for (auto j : points(n))
        for (auto k : points(n)) {
          if (!ok(i, j) || !ok(j, k) || !ok(i, k)) continue;
          for (Element a = 0; a < G.order(); ++a)
            for (Element b = 0; b < G.order(); ++b)
              rels.push_back({x(j, k, b, true), x(i, j, a), x(j, k, b), x(i, k, G.multiply(a, b), true)});
        }
    return rels;
  });
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> amalgam_factorization(const Permutation& s) {
  return s.transposition_factorization();
}

namespace {

// Tuples constant on the cycles of s (including fixed points).
std::vector<Tuple> fixed_tuples(const FiniteGroup& G, const Permutation& s) {
  const std::uint32_t n = s.degree();
  std::vector<std::uint32_t> cycle_of(n, n);
  std::uint32_t cycles = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (cycle_of[i] != n) continue;
    for (std::uint32_t j = i; cycle_of[j] == n; j = s(j)) cycle_of[j] = cycles;
    ++cycles;
  }
  std::vector<Tuple> out;
  std::vector<Element> choice(cycles, 0);
  for (;;) {
    Tuple t(n);
    for (std::uint32_t i = 0; i < n; ++i) t[i] = choice[cycle_of[i]];
    out.push_back(std::move(t));
    std::uint32_t k = 0;
    while (k < cycles && ++choice[k] == G.order()) choice[k++] = 0;
    if (k == cycles) break;
  }
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

std::vector<std::uint64_t> amalgam_identification_counts(std::uint32_t n, const FiniteGroup& g) {
  std::vector<std::uint64_t> counts;
  const std::uint64_t copies = ipow(g.order(), n);
  for (const auto& s : Permutation::all(n)) counts.push_back(copies * fixed_tuples(g, s).size());
  return counts;
}

Presentation amalgam_presentation(std::uint32_t n, GroupPtr g, std::uint64_t size_cap) {
  require_n(n, 2, "amalgam");
  const FiniteGroup& G = *g;
  const std::uint64_t copies = ipow(G.order(), n);
  std::uint64_t fact = 1;
  for (std::uint32_t k = 2; k <= n; ++k) fact *= k;
  if (copies * fact > size_cap)
    throw Error(ErrorKind::kSizeCapExceeded,
                "|G|^n * n! = " + std::to_string(copies * fact) + " exceeds " + std::to_string(size_cap));
  std::vector<Sym> gens;
  for (std::uint64_t c = 0; c < copies; ++c)
    for (auto i : points(n))
      for (auto j : points(n))
        if (i != j) gens.push_back(Sym::copy_transposition(i, j, c));
  return build({"amalgam", n, 0}, g, gens, [&](const Presentation& p) {
    std::vector<Word> rels;
    GroupPtr trivial = share(cyclic_group(1));
    for (std::uint64_t c = 0; c < copies; ++c) {
      if (n >= 3) {
        reflection_type_relators(
            n, *trivial,
            [&](std::uint32_t i, std::uint32_t j, Element, bool iv) {
              return p.letter(Sym::copy_transposition(i, j, c), iv);
            },
            rels);
      } else {
        rels.push_back({p.letter(Sym::copy_transposition(1, 2, c)), p.letter(Sym::copy_transposition(1, 2, c))});
        rels.push_back({p.letter(Sym::copy_transposition(1, 2, c)), p.letter(Sym::copy_transposition(2, 1, c), true)});
      }
    }
    auto copy_word = [&](const std::vector<std::pair<std::uint32_t, std::uint32_t>>& f, std::uint64_t c) {
      Word w;
      for (auto [a, b] : f) w.push_back(p.letter(Sym::copy_transposition(a + 1, b + 1, c)));
      return w;
    };
    for (const auto& s : Permutation::all(n)) {
      if (s.is_identity()) continue;
      const auto f = amalgam_factorization(s);
      const auto fixed = fixed_tuples(G, s);
      for (std::uint64_t gi = 0; gi < copies; ++gi) {
        const Tuple gt = tuple_from_index(G, n, gi);
        const Word wg = copy_word(f, gi);
        for (const Tuple& fix : fixed) {
          // h g^-1 = fix  =>  h = fix * g
          const std::uint64_t hi = tuple_index(G, tuple_multiply(G, fix, gt));
          if (hi == gi) continue;
          rels.push_back(concat(wg, inverse_word(copy_word(f, hi))));
        }
      }
    }
    return rels;
  });
}

std::vector<Word> hs_relators(const Presentation& p, HsRelation rel) {
  const FiniteGroup& G = *p.group();
  const std::uint32_t n = p.meta().n;
  auto h = [&](std::uint32_t i, std::uint32_t j, Element a, bool iv = false) {
    return p.letter(Sym::h(i, j, a), iv);
  };
  std::vector<Word> rels;
  const auto pts = points(n);
  switch (rel) {
    case HsRelation::kR0:
      for (auto i : pts)
        for (auto j : pts)
          if (i != j) rels.push_back({h(i, j, 0)});
      break;
    case HsRelation::kR1:
      for (auto i : pts)
        for (auto j : pts)
          if (i != j)
            for (Element a = 0; a < G.order(); ++a) rels.push_back({h(i, j, a), h(j, i, a)});
      break;
    case HsRelation::kR2:
      // h_jk(b) h_ik(a) h_ij(b) = h_ik(ab)
      for (auto i : pts)
        for (auto j : pts)
          for (auto k : pts) {
            if (i == j || j == k || i == k) continue;
            for (Element a = 0; a < G.order(); ++a)
              for (Element b = 0; b < G.order(); ++b)
                rels.push_back({h(j, k, b), h(i, k, a), h(i, j, b), h(i, k, G.multiply(a, b), true)});
          }
      break;
    case HsRelation::kR3:
      for (auto i : pts)
        for (auto j : pts)
          for (auto k : pts)
            for (auto l : pts) {
              if (i == j || k == l || i == k || i == l || j == k || j == l) continue;
              for (Element a = 0; a < G.order(); ++a)
                for (Element b = 0; b < G.order(); ++b)
                  rels.push_back(commutator_word({h(i, j, a)}, {h(k, l, b)}));
            }
      break;
    case HsRelation::kR4:
      for (auto i : pts)
        for (auto j : pts)
          if (i != j)
            for (Element a = 0; a < G.order(); ++a) rels.push_back({h(i, j, a), h(i, j, G.inverse(a))});
      break;
  }
  return rels;
}

std::vector<Word> hn_relators(const Presentation& p, HnRelation rel) {
  const FiniteGroup& G = *p.group();
  const std::uint32_t n = p.meta().n;
  auto h = [&](std::uint32_t i, std::uint32_t j, Element a, bool iv = false) {
    return p.letter(Sym::h(i, j, a), iv);
  };
  std::vector<Word> rels;
  const auto pts = points(n);
  auto distinct3 = [](auto i, auto j, auto k) { return i != j && j != k && i != k; };
  switch (rel) {
    case HnRelation::kH1:
      for (auto i : pts)
        for (auto j : pts)
          if (i != j)
            for (Element u = 0; u < G.order(); ++u) rels.push_back({h(i, j, u), h(j, i, u)});
      break;
    case HnRelation::kH2:
      for (auto i : pts)
        for (auto j : pts)
          for (auto k : pts)
            if (distinct3(i, j, k))
              for (Element u = 0; u < G.order(); ++u) rels.push_back({h(i, j, u), h(k, i, u), h(j, k, u)});
      break;
    case HnRelation::kH3:
      // h_ij(u) h_ik(v) h_ij(u)^-1 = h_ik(uv) h_ik(u)^-1
      for (auto i : pts)
        for (auto j : pts)
          for (auto k : pts)
            if (distinct3(i, j, k))
              for (Element u = 0; u < G.order(); ++u)
                for (Element v = 0; v < G.order(); ++v)
                  rels.push_back({h(i, j, u), h(i, k, v), h(i, j, u, true), h(i, k, u),
                                  h(i, k, G.multiply(u, v), true)});
      break;
    case HnRelation::kH4:
      // h_ij(u) h_kj(v) h_ij(u)^-1 = h_kj(vu) h_kj(u)^-1
      for (auto i : pts)
        for (auto j : pts)
          for (auto k : pts)
            if (distinct3(i, j, k))
              for (Element u = 0; u < G.order(); ++u)
                for (Element v = 0; v < G.order(); ++v)
                  rels.push_back({h(i, j, u), h(k, j, v), h(i, j, u, true), h(k, j, u),
                                  h(k, j, G.multiply(v, u), true)});
      break;
    case HnRelation::kH5:
      for (auto i : pts)
        for (auto j : pts)
          for (auto k : pts)
            for (auto l : pts) {
              if (i == j || k == l || i == k || i == l || j == k || j == l) continue;
              for (Element u = 0; u < G.order(); ++u)
                for (Element v = 0; v < G.order(); ++v)
                  rels.push_back(commutator_word({h(i, j, u)}, {h(k, l, v)}));
            }
      break;
  }
  return rels;
}

namespace {

std::vector<Sym> h_generators(std::uint32_t n, const FiniteGroup& G) {
  std::vector<Sym> gens;
  for (auto i : points(n))
    for (auto j : points(n))
      if (i != j)
        for (Element a = 0; a < G.order(); ++a) gens.push_back(Sym::h(i, j, a));
  return gens;
}

}  // namespace

Presentation hs_presentation(std::uint32_t n, GroupPtr g, const std::set<HsRelation>& include) {
  require_n(n, 3, "hs");
  return build({"hs", n, 0}, g, h_generators(n, *g), [&](const Presentation& p) {
    std::vector<Word> rels;
    for (HsRelation r : include) {
      auto part = hs_relators(p, r);
      rels.insert(rels.end(), part.begin(), part.end());
    }
    return rels;
  });
}

Presentation hn_presentation(std::uint32_t n, GroupPtr g, const std::set<HnRelation>& include) {
  require_n(n, 3, "hn");
  return build({"hn", n, 0}, g, h_generators(n, *g), [&](const Presentation& p) {
    std::vector<Word> rels;
    for (HnRelation r : include) {
      auto part = hn_relators(p, r);
      rels.insert(rels.end(), part.begin(), part.end());
    }
    return rels;
  });
}

Presentation exterior_square_presentation(GroupPtr g) {
  const FiniteGroup& G = *g;
  if (G.order() > 64) throw Error(ErrorKind::kSizeCapExceeded, "exterior square needs |G| <= 64");
  std::vector<Sym> gens;
  for (Element a = 0; a < G.order(); ++a)
    for (Element b = 0; b < G.order(); ++b) gens.push_back(Sym::wedge(a, b));
  return build({"exterior", 0, 0}, g, gens, [&](const Presentation& p) {
    auto w = [&](Element a, Element b, bool iv = false) { return p.letter(Sym::wedge(a, b), iv); };
    std::vector<Word> rels;
    for (Element a = 0; a < G.order(); ++a) rels.push_back({w(a, a)});
    for (Element x = 0; x < G.order(); ++x)
      for (Element x2 = 0; x2 < G.order(); ++x2)
        for (Element y = 0; y < G.order(); ++y) {
          // w(x x', y) = w(x^x', y^x') w(x', y)
          rels.push_back({w(G.multiply(x, x2), y), w(x2, y, true),
                          w(G.conjugate(x, x2), G.conjugate(y, x2), true)});
          // w(x, y y') = w(x, y') w(x^y', y^y'), with y' := x2
          rels.push_back({w(x, G.multiply(y, x2)), w(G.conjugate(x, x2), G.conjugate(y, x2), true),
                          w(x, x2, true)});
        }
    return rels;
  });
}

AbelianInvariants abelian_invariants_of_presentation(const Presentation& p) {
  if (p.generator_count() > 10000 || p.relators().size() > 10000)
    throw Error(ErrorKind::kSizeCapExceeded, "abelianization limited to 10^4 generators and relators");
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> rows;
  rows.reserve(p.relators().size());
  for (const Word& r : p.relators()) {
    std::map<std::size_t, std::int64_t> exps;
    for (const Letter& l : r) exps[l.gen] += l.inverse ? -1 : 1;
    std::vector<std::pair<std::size_t, std::int64_t>> row;
    for (auto [c, e] : exps)
      if (e != 0) row.emplace_back(c, e);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return abelian_group_of_relation_matrix(p.generator_count(), rows);
}

}  // namespace parasym
