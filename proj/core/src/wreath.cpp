#include "parasym/wreath.hpp"

#include "parasym/error.hpp"

namespace parasym {

Tuple identity_tuple(std::uint32_t n) { return Tuple(n, 0); }

Tuple tuple_multiply(const FiniteGroup& g, const Tuple& a, const Tuple& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::kDegreeMismatch, "tuple product");
  Tuple r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = g.multiply(a[i], b[i]);
  return r;
}

Tuple tuple_inverse(const FiniteGroup& g, const Tuple& a) {
  Tuple r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = g.inverse(a[i]);
  return r;
}

Tuple unit_tuple(std::uint32_t n, std::uint32_t i, Element x) {
  Tuple t(n, 0);
  t.at(i) = x;
  return t;
}

std::uint64_t tuple_index(const FiniteGroup& g, const Tuple& t) {
  std::uint64_t idx = 0;
  for (Element x : t) idx = idx * g.order() + x;
  return idx;
}

Tuple tuple_from_index(const FiniteGroup& g, std::uint32_t n, std::uint64_t index) {
  Tuple t(n);
  for (std::uint32_t k = n; k-- > 0;) {
    t[k] = static_cast<Element>(index % g.order());
    index /= g.order();
  }
  return t;
}

Tuple d_vector(const FiniteGroup& g, std::uint32_t n, std::uint32_t i, std::uint32_t j, Element a) {
  if (i < 1 || j < 1 || i > n || j > n)
    throw Error(ErrorKind::kIndexOutOfRange, "d_vector index outside 1.." + std::to_string(n));
  if (i == j) throw Error(ErrorKind::kIndexOutOfRange, "d_vector requires i != j");
  if (a >= g.order()) throw Error(ErrorKind::kIndexOutOfRange, "element label");
  Tuple t(n, 0);
  t[i - 1] = a;
  t[j - 1] = g.inverse(a);
  return t;
}

WreathProduct::WreathProduct(const FiniteGroup& g, std::uint32_t n, TupleAction action)
    : group_(&g), n_(n), action_(action) {}

std::uint64_t WreathProduct::order() const {
  std::uint64_t r = 1;
  for (std::uint32_t k = 0; k < n_; ++k) r *= group_->order();
  for (std::uint32_t k = 2; k <= n_; ++k) r *= k;
  return r;
}

Tuple WreathProduct::act(const Tuple& v, const Permutation& s) const {
  if (v.size() != s.degree()) throw Error(ErrorKind::kDegreeMismatch, "tuple action");
  Tuple r(v.size());
  if (action_ == TupleAction::kRight) {
    for (std::uint32_t i = 0; i < v.size(); ++i) r[s(i)] = v[i];
  } else {
    for (std::uint32_t i = 0; i < v.size(); ++i) r[i] = v[s(i)];
  }
  return r;
}

void WreathProduct::check(const WreathElement& x) const {
  if (x.vector.size() != n_ || x.perm.degree() != n_)
    throw Error(ErrorKind::kDegreeMismatch, "wreath element of wrong degree");
}

WreathElement WreathProduct::identity() const {
  return {identity_tuple(n_), Permutation::identity(n_)};
}

WreathElement WreathProduct::multiply(const WreathElement& x, const WreathElement& y) const {
  check(x);
  check(y);
  return {tuple_multiply(*group_, x.vector, act(y.vector, x.perm.inverse())), x.perm * y.perm};
}

WreathElement WreathProduct::inverse(const WreathElement& x) const {
  check(x);
  return {act(tuple_inverse(*group_, x.vector), x.perm), x.perm.inverse()};
}

WreathElement WreathProduct::conjugate(const WreathElement& x, const WreathElement& y) const {
  return multiply(multiply(inverse(y), x), y);
}

bool WreathProduct::is_identity(const WreathElement& x) const {
  if (!x.perm.is_identity()) return false;
  for (Element e : x.vector)
    if (e != 0) return false;
  return true;
}

WreathElement WreathProduct::twisted(const Permutation& s, const Tuple& g) const {
  WreathElement gg{g, Permutation::identity(n_)};
  WreathElement ss{identity_tuple(n_), s};
  return conjugate(ss, gg);
}

std::vector<WreathElement> WreathProduct::generators() const {
  std::vector<WreathElement> out;
  for (std::uint32_t i = 0; i < n_; ++i)
    for (Element x = 1; x < group_->order(); ++x)
      out.push_back({unit_tuple(n_, i, x), Permutation::identity(n_)});
  for (std::uint32_t i = 0; i + 1 < n_; ++i)
    out.push_back({identity_tuple(n_), Permutation::transposition(n_, i, i + 1)});
  return out;
}

}  // namespace parasym

std::size_t std::hash<parasym::WreathElement>::operator()(
    const parasym::WreathElement& x) const noexcept {
  std::size_t h = std::hash<parasym::Permutation>{}(x.perm);
  for (auto v : x.vector) h = (h ^ (v + 0x9e3779b9U)) * 0x100000001b3ULL;
  return h;
}
