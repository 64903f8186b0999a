#pragma once

// Reference computations used by the tests. They deliberately avoid the
// library's own algorithms (no enumeration, no Smith normal form, no
// WreathProduct) so that they can serve as independent checks.

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "parasym/coset_enumeration.hpp"
#include "parasym/finite_group.hpp"

namespace oracle {

using parasym::Element;
using parasym::FiniteGroup;

// Invariant factors of the abelian builtins, read off their definitions.
inline std::vector<std::uint64_t> abelian_factors(const std::string& name) {
  static const std::map<std::string, std::vector<std::uint64_t>> table{
      {"c2", {2}}, {"c3", {3}}, {"c4", {4}}, {"c6", {6}}, {"klein", {2, 2}}, {"c4xc2", {2, 4}}, {"c2cubed", {2, 2, 2}},
  };
  return table.at(name);
}

// |H2| of a finite abelian group with invariant factors n_1 | ... | n_k:
// the product of gcd(n_i, n_j) over i < j.
inline std::uint64_t schur_order_abelian(const std::vector<std::uint64_t>& factors) {
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j) order *= std::gcd(factors[i], factors[j]);
  return order;
}

// Schur multipliers of the nonabelian builtins (standard values).
inline std::uint64_t schur_order_nonabelian(const std::string& name) {
  static const std::map<std::string, std::uint64_t> table{{"s3", 1}, {"d4", 2}, {"q8", 1}, {"a4", 2}};
  return table.at(name);
}

inline std::uint64_t schur_order(const std::string& name) {
  if (name == "s3" || name == "d4" || name == "q8" || name == "a4") return schur_order_nonabelian(name);
  return schur_order_abelian(abelian_factors(name));
}

// Derived subgroup by closing all commutators under multiplication.
inline std::set<Element> derived_subgroup(const FiniteGroup& g) {
  std::set<Element> s{0};
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      s.insert(g.multiply(g.multiply(g.inverse(x), g.inverse(y)), g.multiply(x, y)));
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Element> cur(s.begin(), s.end());
    for (Element a : cur)
      for (Element b : cur) grew = s.insert(g.multiply(a, b)).second || grew;
  }
  return s;
}

inline std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t f = 1;
  for (std::uint32_t k = 2; k <= n; ++k) f *= k;
  return f;
}

// |D_n(G)|: tuples whose ordered product lies in [G, G], by brute force.
inline std::uint64_t d_n_order(const FiniteGroup& g, std::uint32_t n) {
  const auto derived = derived_subgroup(g);
  std::uint64_t count = 0;
  const std::uint64_t total = ipow(g.order(), n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    Element prod = 0;
    for (std::uint32_t k = 0; k < n; ++k) {
      prod = g.multiply(prod, static_cast<Element>(rest % g.order()));
      rest /= g.order();
    }
    count += derived.count(prod);
  }
  return count;
}

// G wr S_n as permutations of G x {0..n-1}: a tuple v moves (x, i) to
// (x v_i, i) and s moves (x, i) to (x, s(i)). Returns the order of the
// subgroup generated by the images (d_ij(a), (ij)) of all (ij)_a.
inline std::uint64_t mu_image_order(const FiniteGroup& g, std::uint32_t n) {
  const std::uint32_t m = g.order();
  using Perm = std::vector<std::uint32_t>;
  auto point = [&](Element x, std::uint32_t i) { return i * m + x; };
  std::vector<Perm> gens;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (Element a = 0; a < m; ++a) {
        Perm p(n * m);
        for (std::uint32_t k = 0; k < n; ++k)
          for (Element x = 0; x < m; ++x) p[point(x, k)] = point(x, k);
        for (Element x = 0; x < m; ++x) {
          p[point(x, i)] = point(g.multiply(x, a), j);
          p[point(x, j)] = point(g.multiply(x, g.inverse(a)), i);
        }
        gens.push_back(p);
      }
    }
  Perm id(n * m);
  std::iota(id.begin(), id.end(), 0u);
  std::set<Perm> seen{id};
  std::vector<Perm> queue{id};
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const Perm& s : gens) {
      Perm next(n * m);
      for (std::uint32_t x = 0; x < n * m; ++x) next[x] = s[queue[h][x]];
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  return queue.size();
}

// Multiplication table of an enumerated group (coset 0 is the identity).
inline FiniteGroup table_of(const parasym::EnumeratedGroup& eg) {
  const std::uint32_t m = eg.order();
  std::vector<Element> t(static_cast<std::size_t>(m) * m);
  for (std::uint32_t x = 0; x < m; ++x)
    for (std::uint32_t y = 0; y < m; ++y) t[static_cast<std::size_t>(x) * m + y] = eg.multiply(x, y);
  return FiniteGroup(m, std::move(t));
}

}  // namespace oracle
