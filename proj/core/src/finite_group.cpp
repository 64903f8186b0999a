#include "parasym/finite_group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "parasym/error.hpp"

namespace parasym {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnknownName: return "unknown-name";
    case ErrorKind::kParseError: return "parse-error";
    case ErrorKind::kNotAGroup: return "not-a-group";
    case ErrorKind::kIdentityNotZero: return "identity-not-zero";
    case ErrorKind::kDegreeMismatch: return "degree-mismatch";
    case ErrorKind::kIndexOutOfRange: return "index-out-of-range";
    case ErrorKind::kNotAbelian: return "not-abelian";
    case ErrorKind::kNotClosed: return "not-closed";
    case ErrorKind::kOutOfRange: return "out-of-range";
    case ErrorKind::kSizeCapExceeded: return "size-cap-exceeded";
    case ErrorKind::kMalformedWord: return "malformed-word";
    case ErrorKind::kIncompleteTable: return "incomplete-table";
    case ErrorKind::kUnsupportedSymbol: return "unsupported-symbol-kind";
    case ErrorKind::kMalformedChain: return "malformed-chain";
    case ErrorKind::kMethodInapplicable: return "method-inapplicable";
    case ErrorKind::kCapacityExceeded: return "capacity-exceeded";
  }
  return "error";
}

namespace {

constexpr std::uint32_t kMaxTableOrder = 10000;
constexpr std::uint32_t kFullAssociativityCheck = 64;

void validate(std::uint32_t m, const std::vector<Element>& t) {
  for (std::uint32_t x = 0; x < m; ++x) {
    if (t[x] != x || t[x * m] != x)
      throw Error(ErrorKind::kIdentityNotZero, "row and column 0 must be the identity map");
  }
  std::vector<std::uint32_t> seen(m, 0);
  std::uint32_t stamp = 0;
  for (std::uint32_t r = 0; r < m; ++r) {
    ++stamp;
    for (std::uint32_t c = 0; c < m; ++c) {
      Element v = t[r * m + c];
      if (seen[v] == stamp)
        throw Error(ErrorKind::kNotAGroup, "row " + std::to_string(r) + " is not a permutation");
      seen[v] = stamp;
    }
  }
  for (std::uint32_t c = 0; c < m; ++c) {
    ++stamp;
    for (std::uint32_t r = 0; r < m; ++r) {
      Element v = t[r * m + c];
      if (seen[v] == stamp)
        throw Error(ErrorKind::kNotAGroup, "column " + std::to_string(c) + " is not a permutation");
      seen[v] = stamp;
    }
  }
  auto assoc = [&](Element a, Element b, Element c) {
    if (t[t[a * m + b] * m + c] != t[a * m + t[b * m + c]])
      throw Error(ErrorKind::kNotAGroup, "associativity fails for (" + std::to_string(a) + ", " +
                                             std::to_string(b) + ", " + std::to_string(c) + ")");
  };
  if (m <= kFullAssociativityCheck) {
    for (Element a = 0; a < m; ++a)
      for (Element b = 0; b < m; ++b)
        for (Element c = 0; c < m; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed5eedULL ^ m);
    std::uniform_int_distribution<Element> pick(0, m - 1);
    const std::uint64_t samples = 10ULL * m * m;
    for (std::uint64_t s = 0; s < samples; ++s) assoc(pick(rng), pick(rng), pick(rng));
  }
}

}  // namespace

FiniteGroup::FiniteGroup(std::uint32_t order, std::vector<Element> table,
                         std::vector<std::string> names)
    : order_(order), table_(std::move(table)), names_(std::move(names)) {
  if (order_ == 0 || order_ > kMaxTableOrder)
    throw Error(ErrorKind::kNotAGroup, "order must lie in 1.." + std::to_string(kMaxTableOrder));
  if (table_.size() != static_cast<std::size_t>(order_) * order_)
    throw Error(ErrorKind::kNotAGroup, "table size does not match order");
  for (Element v : table_)
    if (v >= order_) throw Error(ErrorKind::kNotAGroup, "table entry out of range");
  if (!names_.empty() && names_.size() != order_)
    throw Error(ErrorKind::kParseError, "names list must have one entry per element");
  validate(order_, table_);
  inverses_.resize(order_);
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b)
      if (table_[a * order_ + b] == 0) inverses_[a] = b;
}

Element FiniteGroup::power(Element a, std::int64_t k) const {
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  Element result = 0;
  while (k > 0) {
    if (k & 1) result = multiply(result, a);
    a = multiply(a, a);
    k >>= 1;
  }
  return result;
}

std::uint32_t FiniteGroup::element_order(Element a) const {
  std::uint32_t k = 1;
  for (Element x = a; x != 0; x = multiply(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

std::string FiniteGroup::name(Element a) const {
  if (!names_.empty()) return names_[a];
  return a == 0 ? std::string("e") : "g" + std::to_string(a);
}

std::optional<Element> FiniteGroup::lookup(std::string_view label) const {
  for (Element a = 0; a < names_.size(); ++a)
    if (names_[a] == label) return a;
  if (label == "e") return Element{0};
  if (label.size() >= 2 && label[0] == 'g') {
    Element k = 0;
    auto [ptr, ec] = std::from_chars(label.data() + 1, label.data() + label.size(), k);
    if (ec == std::errc() && ptr == label.data() + label.size() && k < order_) return k;
  }
  return std::nullopt;
}

std::vector<Element> FiniteGroup::derived_subgroup() const {
  std::vector<char> in(order_, 0);
  std::vector<Element> elems{0};
  in[0] = 1;
  std::vector<Element> gens;
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b) {
      Element c = commutator(a, b);
      if (!in[c]) {
        in[c] = 1;
        elems.push_back(c);
      }
    }
  // products of commutators
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (std::size_t k = 0; k < elems.size(); ++k) {
      Element p = multiply(elems[head], elems[k]);
      if (!in[p]) {
        in[p] = 1;
        elems.push_back(p);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

FiniteGroup cyclic_group(std::uint32_t m) {
  std::vector<Element> t(static_cast<std::size_t>(m) * m);
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = 0; b < m; ++b) t[a * m + b] = (a + b) % m;
  return FiniteGroup(m, std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::uint32_t m = a.order() * b.order();
  std::vector<Element> t(static_cast<std::size_t>(m) * m);
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y) {
      Element hi = a.multiply(x / b.order(), y / b.order());
      Element lo = b.multiply(x % b.order(), y % b.order());
      t[x * m + y] = hi * b.order() + lo;
    }
  return FiniteGroup(m, std::move(t));
}

FiniteGroup group_from_permutations(const std::vector<std::vector<std::uint32_t>>& gens) {
  using Perm = std::vector<std::uint32_t>;
  const std::size_t d = gens.empty() ? 0 : gens.front().size();
  Perm id(d);
  std::iota(id.begin(), id.end(), 0u);
  auto compose = [](const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
  };
  std::vector<Perm> elems{id};
  std::map<Perm, Element> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (const Perm& g : gens) {
      Perm p = compose(elems[head], g);
      if (index.emplace(p, static_cast<Element>(elems.size())).second) elems.push_back(p);
    }
  const auto m = static_cast<std::uint32_t>(elems.size());
  std::vector<Element> t(static_cast<std::size_t>(m) * m);
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y) t[x * m + y] = index.at(compose(elems[x], elems[y]));
  return FiniteGroup(m, std::move(t));
}

namespace {

FiniteGroup quaternion_group() {
  // element = sign * 4 + unit, unit in {1, i, j, k}
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<Element> t(64);
  for (Element x = 0; x < 8; ++x)
    for (Element y = 0; y < 8; ++y) {
      int ux = x % 4, uy = y % 4;
      int sign = (x / 4 + y / 4 + kSign[ux][uy]) % 2;
      t[x * 8 + y] = static_cast<Element>(sign * 4 + kUnit[ux][uy]);
    }
  return FiniteGroup(8, std::move(t), {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

std::optional<FiniteGroup> single_builtin(std::string_view name) {
  if (name == "c1" || name == "trivial") return cyclic_group(1);
  if (name == "c2") return cyclic_group(2);
  if (name == "c3") return cyclic_group(3);
  if (name == "c4") return cyclic_group(4);
  if (name == "c6") return cyclic_group(6);
  if (name == "klein") return direct_product(cyclic_group(2), cyclic_group(2));
  if (name == "c4xc2") return direct_product(cyclic_group(4), cyclic_group(2));
  if (name == "c2cubed")
    return direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2));
  if (name == "s3") return group_from_permutations({{1, 0, 2}, {1, 2, 0}});
  if (name == "d4") return group_from_permutations({{1, 2, 3, 0}, {0, 3, 2, 1}});
  if (name == "q8") return quaternion_group();
  if (name == "a4") return group_from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}});
  return std::nullopt;
}

}  // namespace

FiniteGroup make_builtin(std::string_view name) {
  if (auto g = single_builtin(name)) return *g;
  std::optional<FiniteGroup> acc;
  std::size_t start = 0;
  while (start <= name.size()) {
    std::size_t x = name.find('x', start);
    std::string_view part = name.substr(start, x == std::string_view::npos ? x : x - start);
    auto g = single_builtin(part);
    if (!g) throw Error(ErrorKind::kUnknownName, std::string(name));
    acc = acc ? direct_product(*acc, *g) : *g;
    if (x == std::string_view::npos) break;
    start = x + 1;
  }
  if (!acc) throw Error(ErrorKind::kUnknownName, std::string(name));
  return *acc;
}

FiniteGroup parse_multiplication_table(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string s(text);
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos)
    lines.pop_back();
  if (lines.empty()) throw Error(ErrorKind::kParseError, "empty input");

  auto parse_uint = [](std::string_view tok, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw Error(ErrorKind::kParseError, std::string("bad ") + what + " '" + std::string(tok) + "'");
    return v;
  };
  auto tokens = [](const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
  };

  auto head = tokens(lines[0]);
  if (head.size() != 1) throw Error(ErrorKind::kParseError, "line 1 must hold the order");
  const std::uint64_t m = parse_uint(head[0], "order");
  if (m == 0 || m > kMaxTableOrder) throw Error(ErrorKind::kParseError, "order out of range");
  if (lines.size() < m + 1) throw Error(ErrorKind::kParseError, "missing table rows");

  std::vector<Element> table;
  table.reserve(m * m);
  for (std::uint64_t r = 0; r < m; ++r) {
    auto row = tokens(lines[r + 1]);
    if (row.size() != m)
      throw Error(ErrorKind::kParseError, "row " + std::to_string(r) + " has wrong length");
    for (const auto& tok : row) {
      auto v = parse_uint(tok, "entry");
      if (v >= m) throw Error(ErrorKind::kParseError, "entry out of range: " + tok);
      table.push_back(static_cast<Element>(v));
    }
  }
  std::vector<std::string> names;
  if (lines.size() > m + 1) {
    if (lines.size() > m + 2) throw Error(ErrorKind::kParseError, "trailing content");
    const std::string& last = lines[m + 1];
    constexpr std::string_view kPrefix = "names:";
    if (last.rfind(kPrefix, 0) != 0) throw Error(ErrorKind::kParseError, "expected names line");
    names = tokens(last.substr(kPrefix.size()));
    if (names.size() != m) throw Error(ErrorKind::kParseError, "names line has wrong length");
  }
  return FiniteGroup(static_cast<std::uint32_t>(m), std::move(table), std::move(names));
}

std::string format_multiplication_table(const FiniteGroup& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (Element r = 0; r < g.order(); ++r) {
    for (Element c = 0; c < g.order(); ++c) out << (c ? " " : "") << g.multiply(r, c);
    out << '\n';
  }
  if (g.has_names()) {
    out << "names:";
    for (Element a = 0; a < g.order(); ++a) out << ' ' << g.name(a);
    out << '\n';
  }
  return out.str();
}

}  // namespace parasym
