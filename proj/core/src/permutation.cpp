#include "parasym/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "parasym/error.hpp"

namespace parasym {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (auto v : images_) {
    if (v >= images_.size() || hit[v]) throw Error(ErrorKind::kOutOfRange, "not a permutation");
    hit[v] = 1;
  }
}

Permutation Permutation::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::transposition(std::uint32_t degree, std::uint32_t i, std::uint32_t j) {
  if (i >= degree || j >= degree) throw Error(ErrorKind::kIndexOutOfRange, "transposition point");
  Permutation p = identity(degree);
  std::swap(p.images_[i], p.images_[j]);
  return p;
}

std::vector<Permutation> Permutation::all(std::uint32_t degree) {
  std::vector<Permutation> out;
  Permutation p = identity(degree);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.images_.begin(), p.images_.end()));
  return out;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Permutation::cycle_count() const {
  std::vector<char> seen(images_.size(), 0);
  std::size_t count = 0;
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (std::uint32_t j = i; !seen[j]; j = images_[j]) seen[j] = 1;
  }
  return count;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<std::uint32_t> cyc;
    for (std::uint32_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Permutation::transposition_factorization()
    const {
  // A cycle c0 -> c1 -> ... -> c_{p-1} equals (c_{p-2} c_{p-1}) ... (c1 c2)(c0 c1)
  // under left-first products.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const auto& cyc : cycles()) {
    for (std::size_t k = cyc.size() - 1; k-- > 0;) {
      auto a = cyc[k], b = cyc[k + 1];
      out.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::string s;
  for (const auto& c : cyc) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(c[k] + 1);
    }
    s += ')';
  }
  return s;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw Error(ErrorKind::kDegreeMismatch, "permutation product");
  Permutation r;
  r.images_.resize(p.images_.size());
  for (std::size_t i = 0; i < p.images_.size(); ++i) r.images_[i] = q.images_[p.images_[i]];
  return r;
}

}  // namespace parasym

std::size_t std::hash<parasym::Permutation>::operator()(
    const parasym::Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto v : p.images()) h = (h ^ v) * 0x100000001b3ULL;
  return h;
}
