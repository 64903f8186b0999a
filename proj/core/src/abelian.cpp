#include "parasym/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "parasym/error.hpp"

namespace parasym {

using BigInt = boost::multiprecision::cpp_int;

namespace {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t m) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

bool AbelianInvariants::is_finite() const {
  return std::find(factors.begin(), factors.end(), 0) == factors.end();
}

std::uint64_t AbelianInvariants::order() const {
  std::uint64_t r = 1;
  for (auto d : factors) r *= d;
  return r;
}

std::string AbelianInvariants::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(factors[k]);
  }
  return s + "]";
}

AbelianInvariants AbelianInvariants::from_cyclic_orders(std::vector<std::uint64_t> orders) {
  std::size_t free_rank = 0;
  std::map<std::uint64_t, std::vector<std::uint64_t>> primary;
  for (auto m : orders) {
    if (m == 0) {
      ++free_rank;
      continue;
    }
    for (auto [p, e] : factorize(m)) primary[p].push_back(ipow(p, e));
  }
  std::size_t len = 0;
  for (auto& [p, powers] : primary) {
    std::sort(powers.rbegin(), powers.rend());
    len = std::max(len, powers.size());
  }
  // largest invariant factor first, then reverse
  std::vector<std::uint64_t> desc(len, 1);
  for (auto& [p, powers] : primary)
    for (std::size_t k = 0; k < powers.size(); ++k) desc[k] *= powers[k];
  AbelianInvariants inv;
  inv.factors.assign(desc.rbegin(), desc.rend());
  inv.factors.insert(inv.factors.end(), free_rank, 0);
  return inv;
}

AbelianInvariants invariants_from_element_orders(const std::vector<std::uint64_t>& orders) {
  const std::uint64_t n = orders.size();
  std::vector<std::uint64_t> cyclic;
  for (auto [p, e] : factorize(n)) {
    // c[k] = #{x : ord(x) | p^k} = p^(sum_i min(e_i, k))
    std::vector<unsigned> logc(e + 1, 0);
    for (unsigned k = 0; k <= e; ++k) {
      const std::uint64_t pk = ipow(p, k);
      std::uint64_t count = 0;
      for (auto o : orders)
        if (pk % o == 0) ++count;
      unsigned l = 0;
      while (count > 1) {
        if (count % p != 0) throw Error(ErrorKind::kNotAbelian, "element orders are not abelian");
        count /= p;
        ++l;
      }
      logc[k] = l;
    }
    // number of p-factors of exponent >= k is logc[k] - logc[k-1]
    for (unsigned k = 1; k <= e; ++k) {
      const unsigned at_least_k = logc[k] - logc[k - 1];
      const unsigned at_least_next = k < e ? logc[k + 1] - logc[k] : 0;
      for (unsigned c = at_least_next; c < at_least_k; ++c) cyclic.push_back(ipow(p, k));
    }
  }
  auto inv = AbelianInvariants::from_cyclic_orders(cyclic);
  if (inv.order() != n) throw Error(ErrorKind::kNotAbelian, "element orders are not abelian");
  return inv;
}

AbelianInvariants abelianization(const FiniteGroup& g) {
  const auto derived = g.derived_subgroup();
  std::vector<char> in_derived(g.order(), 0);
  for (Element d : derived) in_derived[d] = 1;
  std::vector<char> covered(g.order(), 0);
  std::vector<std::uint64_t> orders;
  for (Element x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    for (Element d : derived) covered[g.multiply(x, d)] = 1;
    std::uint64_t k = 1;
    for (Element y = x; !in_derived[y]; y = g.multiply(y, x)) ++k;
    orders.push_back(k);
  }
  return invariants_from_element_orders(orders);
}

AbelianInvariants abelian_invariants_of_subgroup(const FiniteGroup& g,
                                                 const std::vector<Element>& elements) {
  std::vector<char> in(g.order(), 0);
  for (Element x : elements) {
    if (x >= g.order()) throw Error(ErrorKind::kNotClosed, "element out of range");
    in[x] = 1;
  }
  if (!in[0]) throw Error(ErrorKind::kNotClosed, "identity missing");
  std::vector<Element> uniq;
  for (Element x = 0; x < g.order(); ++x)
    if (in[x]) uniq.push_back(x);
  for (Element a : uniq)
    for (Element b : uniq) {
      if (!in[g.multiply(a, b)]) throw Error(ErrorKind::kNotClosed, "set is not closed");
      if (g.multiply(a, b) != g.multiply(b, a))
        throw Error(ErrorKind::kNotAbelian, "elements do not commute");
    }
  std::vector<std::uint64_t> orders;
  for (Element a : uniq) orders.push_back(g.element_order(a));
  return invariants_from_element_orders(orders);
}

namespace {

using SparseRow = std::vector<std::pair<std::size_t, BigInt>>;

// r := a * r + b * s, dropping zeros
SparseRow combine(const BigInt& a, const SparseRow& r, const BigInt& b, const SparseRow& s) {
  SparseRow out;
  out.reserve(r.size() + s.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < s.size()) {
    BigInt v;
    std::size_t col;
    if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
      col = r[i].first;
      v = a * r[i].second;
      ++i;
    } else if (i == r.size() || s[j].first < r[i].first) {
      col = s[j].first;
      v = b * s[j].second;
      ++j;
    } else {
      col = r[i].first;
      v = a * r[i].second + b * s[j].second;
      ++i;
      ++j;
    }
    if (v != 0) out.emplace_back(col, std::move(v));
  }
  return out;
}

void extended_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  x = old_s;
  y = old_t;
}

}  // namespace

AbelianInvariants abelian_group_of_relation_matrix(
    std::size_t cols, const std::vector<std::vector<std::pair<std::size_t, std::int64_t>>>& rows) {
  // Echelon basis of the row lattice, built one row at a time with
  // unimodular 2x2 row operations.
  std::map<std::size_t, SparseRow> pivots;
  for (const auto& raw : rows) {
    std::map<std::size_t, BigInt> acc;
    for (auto [c, v] : raw) {
      if (c >= cols) throw Error(ErrorKind::kMalformedWord, "relation column out of range");
      acc[c] += v;
    }
    SparseRow r;
    for (auto& [c, v] : acc)
      if (v != 0) r.emplace_back(c, v);
    while (!r.empty()) {
      const std::size_t lead = r.front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        if (r.front().second < 0)
          for (auto& e : r) e.second = -e.second;
        pivots.emplace(lead, std::move(r));
        break;
      }
      SparseRow& p = it->second;
      const BigInt pc = p.front().second;
      const BigInt rc = r.front().second;
      if (rc % pc == 0) {
        r = combine(1, r, -(rc / pc), p);
        continue;
      }
      BigInt g, s, t;
      extended_gcd(pc, rc, g, s, t);
      SparseRow new_pivot = combine(s, p, t, r);
      SparseRow rest = combine(rc / g, p, -(pc / g), r);
      p = std::move(new_pivot);
      r = std::move(rest);
    }
  }

  // Diagonalize the echelon matrix.
  std::vector<std::size_t> col_of;
  std::map<std::size_t, std::size_t> col_index;
  for (auto& [lead, row] : pivots)
    for (auto& [c, v] : row) col_index.emplace(c, 0);
  for (auto& [c, k] : col_index) {
    k = col_of.size();
    col_of.push_back(c);
  }
  const std::size_t m = pivots.size(), w = col_of.size();
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(w));
  {
    std::size_t i = 0;
    for (auto& [lead, row] : pivots) {
      for (auto& [c, v] : row) a[i][col_index[c]] = v;
      ++i;
    }
  }
  std::vector<std::uint64_t> diag;
  for (std::size_t t = 0; t < m && t < w; ++t) {
    for (;;) {
      // smallest nonzero in the remaining block
      std::size_t bi = m, bj = w;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < w; ++j)
          if (a[i][j] != 0 && (bi == m || abs(a[i][j]) < abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == m) break;
      std::swap(a[t], a[bi]);
      if (bj != t)
        for (std::size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][bj]);
      bool clean = true;
      const BigInt piv = a[t][t];
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / piv;
        if (q != 0)
          for (std::size_t j = t; j < w; ++j)
            if (a[t][j] != 0) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < w; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / piv;
        if (q != 0)
          for (std::size_t i = t; i < m; ++i)
            if (a[i][t] != 0) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[t][t] == 0) break;
    BigInt d = abs(a[t][t]);
    if (d > std::numeric_limits<std::uint64_t>::max())
      throw Error(ErrorKind::kOutOfRange, "invariant factor exceeds 64 bits");
    diag.push_back(static_cast<std::uint64_t>(d));
  }
  std::vector<std::uint64_t> orders = diag;
  orders.insert(orders.end(), cols - diag.size(), 0);
  return AbelianInvariants::from_cyclic_orders(orders);
}

}  // namespace parasym
