#include "parasym/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "parasym/error.hpp"

namespace parasym {

GeneratorSymbol GeneratorSymbol::coxeter(std::uint32_t i, Element a) {
  GeneratorSymbol s;
  s.kind = SymbolKind::kCoxeter;
  s.i = i;
  s.j = i + 1;
  s.a = a;
  return s;
}

GeneratorSymbol GeneratorSymbol::transposition(std::uint32_t i, std::uint32_t j, Element a) {
  GeneratorSymbol s;
  s.kind = SymbolKind::kTransposition;
  s.i = i;
  s.j = j;
  s.a = a;
  return s;
}

GeneratorSymbol GeneratorSymbol::copy_transposition(std::uint32_t i, std::uint32_t j,
                                                    std::uint64_t copy) {
  GeneratorSymbol s;
  s.kind = SymbolKind::kCopy;
  s.i = i;
  s.j = j;
  s.copy = copy;
  return s;
}

GeneratorSymbol GeneratorSymbol::h(std::uint32_t i, std::uint32_t j, Element a) {
  GeneratorSymbol s;
  s.kind = SymbolKind::kH;
  s.i = i;
  s.j = j;
  s.a = a;
  return s;
}

GeneratorSymbol GeneratorSymbol::wedge(Element a, Element b) {
  GeneratorSymbol s;
  s.kind = SymbolKind::kWedge;
  s.a = a;
  s.b = b;
  return s;
}

GeneratorSymbol GeneratorSymbol::reflection(std::uint32_t i, std::uint32_t j) {
  GeneratorSymbol s;
  s.kind = SymbolKind::kReflection;
  s.i = i;
  s.j = j;
  return s;
}

GeneratorSymbol GeneratorSymbol::named(std::string name) {
  GeneratorSymbol s;
  s.kind = SymbolKind::kNamed;
  s.name = std::move(name);
  return s;
}

Word inverse_word(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(it->inverted());
  return r;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word free_reduce(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (const Letter& l : w) {
    if (!r.empty() && r.back() == l.inverted())
      r.pop_back();
    else
      r.push_back(l);
  }
  return r;
}

Word cyclically_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverted()) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word commutator_word(const Word& x, const Word& y) {
  return concat(concat(inverse_word(x), inverse_word(y)), concat(x, y));
}

Word conjugate_word(const Word& x, const Word& y) { return concat(concat(inverse_word(y), x), y); }

namespace {

Word min_rotation(const Word& w) {
  Word best = w;
  Word rot = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

Word canonical(const Word& w) { return std::min(min_rotation(w), min_rotation(inverse_word(w))); }

}  // namespace

Presentation::Presentation(Meta meta, std::shared_ptr<const FiniteGroup> group,
                           std::vector<GeneratorSymbol> generators, std::vector<Word> relators)
    : meta_(std::move(meta)), group_(std::move(group)), generators_(std::move(generators)) {
  for (std::uint32_t g = 0; g < generators_.size(); ++g) {
    if (!index_.emplace(generators_[g], g).second)
      throw Error(ErrorKind::kMalformedWord, "duplicate generator " + symbol_name(g));
  }
  std::set<Word> seen;
  for (const Word& r : relators) {
    check_word(r);
    Word red = cyclically_reduce(r);
    if (red.empty()) continue;
    if (seen.insert(canonical(red)).second) relators_.push_back(std::move(red));
  }
}

std::optional<std::uint32_t> Presentation::find(const GeneratorSymbol& sym) const {
  auto it = index_.find(sym);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Presentation::id(const GeneratorSymbol& sym) const {
  auto g = find(sym);
  if (!g)
    throw Error(ErrorKind::kUnsupportedSymbol,
                "no generator " + symbol_to_string(sym, group_.get(), meta_.n) + " in " + meta_.family);
  return *g;
}

Presentation Presentation::with_relators(const std::vector<Word>& extra, std::string family) const {
  std::vector<Word> rels = relators_;
  rels.insert(rels.end(), extra.begin(), extra.end());
  Meta m = meta_;
  m.family = std::move(family);
  return Presentation(m, group_, generators_, rels);
}

void Presentation::check_word(const Word& w) const {
  for (const Letter& l : w)
    if (l.gen >= generators_.size())
      throw Error(ErrorKind::kMalformedWord, "letter references undeclared generator " +
                                                 std::to_string(l.gen));
}

std::string symbol_to_string(const GeneratorSymbol& sym, const FiniteGroup* group, std::uint32_t n) {
  auto label = [&](Element x) { return group ? group->name(x) : "g" + std::to_string(x); };
  auto pair = [&](std::uint32_t i, std::uint32_t j) {
    if (n < 10) return std::to_string(i) + std::to_string(j);
    return std::to_string(i) + "," + std::to_string(j);
  };
  switch (sym.kind) {
    case SymbolKind::kCoxeter:
      return "s_" + std::to_string(sym.i) + "(" + label(sym.a) + ")";
    case SymbolKind::kTransposition:
      return "(" + pair(sym.i, sym.j) + ")_" + label(sym.a);
    case SymbolKind::kCopy: {
      std::string s = "(" + pair(sym.i, sym.j) + ")^{(";
      std::vector<std::string> parts;
      std::uint64_t idx = sym.copy;
      const std::uint32_t m = group ? group->order() : 1;
      for (std::uint32_t k = 0; k < n; ++k) {
        parts.push_back(label(static_cast<Element>(idx % m)));
        idx /= m;
      }
      for (std::size_t k = parts.size(); k-- > 0;) s += parts[k] + (k ? "," : "");
      return s + ")}";
    }
    case SymbolKind::kH:
      return "h_{" + pair(sym.i, sym.j) + "}(" + label(sym.a) + ")";
    case SymbolKind::kWedge:
      return "w(" + label(sym.a) + "," + label(sym.b) + ")";
    case SymbolKind::kReflection:
      return "(" + pair(sym.i, sym.j) + ")";
    case SymbolKind::kNamed:
      return sym.name;
  }
  return "?";
}

std::string Presentation::symbol_name(std::uint32_t g) const {
  return symbol_to_string(generators_.at(g), group_.get(), meta_.n);
}

std::string Presentation::word_to_string(const Word& w) const {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += symbol_name(w[k].gen);
    if (w[k].inverse) s += "^-1";
  }
  return s;
}

std::string Presentation::dump() const {
  std::ostringstream out;
  for (std::uint32_t g = 0; g < generators_.size(); ++g)
    out << 'g' << g << " := " << symbol_name(g) << '\n';
  for (const Word& r : relators_) {
    for (std::size_t k = 0; k < r.size(); ++k) {
      out << (k ? " " : "") << 'g' << r[k].gen;
      if (r[k].inverse) out << "^-1";
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::uint32_t parse_index(std::string_view s, std::string_view token) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorKind::kParseError, "bad index in '" + std::string(token) + "'");
  return v;
}

// "12" -> (1, 2); "1,12" -> (1, 12)
std::pair<std::uint32_t, std::uint32_t> parse_pair(std::string_view s, std::string_view token) {
  auto comma = s.find(',');
  if (comma != std::string_view::npos)
    return {parse_index(s.substr(0, comma), token), parse_index(s.substr(comma + 1), token)};
  if (s.size() != 2) throw Error(ErrorKind::kParseError, "bad index pair in '" + std::string(token) + "'");
  return {parse_index(s.substr(0, 1), token), parse_index(s.substr(1, 1), token)};
}

ParsedLetter parse_token(std::string_view tok, std::uint32_t n) {
  ParsedLetter out;
  std::string_view body = tok;
  constexpr std::string_view kInv = "^-1";
  if (body.size() > kInv.size() && body.substr(body.size() - kInv.size()) == kInv) {
    out.inverse = true;
    body.remove_suffix(kInv.size());
  }
  auto bad = [&] { return Error(ErrorKind::kParseError, "cannot parse letter '" + std::string(tok) + "'"); };
  if (body.starts_with("(")) {
    auto close = body.find(')');
    if (close == std::string_view::npos) throw bad();
    std::tie(out.i, out.j) = parse_pair(body.substr(1, close - 1), tok);
    auto rest = body.substr(close + 1);
    if (rest.empty()) {
      out.kind = SymbolKind::kReflection;
    } else {
      if (rest.size() < 2 || rest[0] != '_') throw bad();
      out.kind = SymbolKind::kTransposition;
      out.label = std::string(rest.substr(1));
    }
  } else if (body.starts_with("h_")) {
    out.kind = SymbolKind::kH;
    auto rest = body.substr(2);
    std::string_view idx;
    if (rest.starts_with("{")) {
      auto close = rest.find('}');
      if (close == std::string_view::npos) throw bad();
      idx = rest.substr(1, close - 1);
      rest = rest.substr(close + 1);
    } else {
      auto open = rest.find('(');
      if (open == std::string_view::npos) throw bad();
      idx = rest.substr(0, open);
      rest = rest.substr(open);
    }
    std::tie(out.i, out.j) = parse_pair(idx, tok);
    if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')') throw bad();
    out.label = std::string(rest.substr(1, rest.size() - 2));
  } else if (body.starts_with("s_")) {
    out.kind = SymbolKind::kCoxeter;
    auto open = body.find('(');
    if (open == std::string_view::npos || body.back() != ')') throw bad();
    out.i = parse_index(body.substr(2, open - 2), tok);
    out.j = out.i + 1;
    out.label = std::string(body.substr(open + 1, body.size() - open - 2));
    if (out.label.empty()) throw bad();
  } else {
    throw bad();
  }
  if (out.i < 1 || out.j < 1 || out.i > n || out.j > n || out.i == out.j)
    throw Error(ErrorKind::kParseError, "indices out of range in '" + std::string(tok) + "'");
  return out;
}

}  // namespace

std::vector<ParsedLetter> parse_word_text(std::string_view text, std::uint32_t n) {
  std::vector<ParsedLetter> out;
  std::string s(text);
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(parse_token(tok, n));
  return out;
}

Word resolve_word(const Presentation& p, const std::vector<ParsedLetter>& letters) {
  Word w;
  for (const auto& pl : letters) {
    Element a = 0;
    if (pl.kind != SymbolKind::kReflection) {
      if (!p.group()) throw Error(ErrorKind::kParseError, "labels need a group");
      auto e = p.group()->lookup(pl.label);
      if (!e) throw Error(ErrorKind::kParseError, "unknown element label '" + pl.label + "'");
      a = *e;
    }
    GeneratorSymbol sym;
    switch (pl.kind) {
      case SymbolKind::kCoxeter: sym = GeneratorSymbol::coxeter(pl.i, a); break;
      case SymbolKind::kTransposition: sym = GeneratorSymbol::transposition(pl.i, pl.j, a); break;
      case SymbolKind::kH: sym = GeneratorSymbol::h(pl.i, pl.j, a); break;
      case SymbolKind::kReflection: sym = GeneratorSymbol::reflection(pl.i, pl.j); break;
      default: throw Error(ErrorKind::kParseError, "unsupported letter kind");
    }
    w.push_back(p.letter(sym, pl.inverse));
  }
  return w;
}

}  // namespace parasym
