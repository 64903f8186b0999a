#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parasym/finite_group.hpp"

namespace parasym {

enum class SymbolKind : std::uint8_t {
  kCoxeter,        // s_i(a)
  kTransposition,  // (ij)_a
  kCopy,           // (ij)^{(g)}, g in G^n
  kH,              // h_ij(a)
  kWedge,          // w(a, b)
  kReflection,     // (ij), plain S_n
  kNamed,          // free-form generator, used for ad-hoc presentations
};

/// A structured generator label. Point indices i, j are 1-based, as they are
/// written; `copy` is the tuple index of g in G^n for kCopy symbols.
struct GeneratorSymbol {
  SymbolKind kind = SymbolKind::kNamed;
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint64_t copy = 0;
  Element a = 0;
  Element b = 0;
  std::string name;

  static GeneratorSymbol coxeter(std::uint32_t i, Element a);
  static GeneratorSymbol transposition(std::uint32_t i, std::uint32_t j, Element a);
  static GeneratorSymbol copy_transposition(std::uint32_t i, std::uint32_t j, std::uint64_t copy);
  static GeneratorSymbol h(std::uint32_t i, std::uint32_t j, Element a);
  static GeneratorSymbol wedge(Element a, Element b);
  static GeneratorSymbol reflection(std::uint32_t i, std::uint32_t j);
  static GeneratorSymbol named(std::string name);

  friend auto operator<=>(const GeneratorSymbol&, const GeneratorSymbol&) = default;
  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

struct Letter {
  std::uint32_t gen = 0;
  bool inverse = false;

  Letter inverted() const { return {gen, !inverse}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Letter gen(std::uint32_t g) { return {g, false}; }
inline Letter inv(std::uint32_t g) { return {g, true}; }

Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);
Word free_reduce(const Word& w);
Word cyclically_reduce(const Word& w);
/// [x, y] = x^-1 y^-1 x y
Word commutator_word(const Word& x, const Word& y);
/// y^-1 x y
Word conjugate_word(const Word& x, const Word& y);

/// A finitely presented group with structured generators. Relators are
/// freely and cyclically reduced on construction; empty relators are
/// dropped and a relator is discarded when it matches an earlier one up to
/// cyclic rotation and inversion.
class Presentation {
 public:
  struct Meta {
    std::string family;
    std::uint32_t n = 0;
    std::uint32_t t = 0;
  };

  Presentation(Meta meta, std::shared_ptr<const FiniteGroup> group,
               std::vector<GeneratorSymbol> generators, std::vector<Word> relators);

  const Meta& meta() const noexcept { return meta_; }
  const FiniteGroup* group() const noexcept { return group_.get(); }
  std::shared_ptr<const FiniteGroup> group_ptr() const noexcept { return group_; }

  std::size_t generator_count() const noexcept { return generators_.size(); }
  const std::vector<GeneratorSymbol>& generators() const noexcept { return generators_; }
  const GeneratorSymbol& symbol(std::uint32_t g) const { return generators_.at(g); }
  const std::vector<Word>& relators() const noexcept { return relators_; }

  std::optional<std::uint32_t> find(const GeneratorSymbol& sym) const;
  /// Throws kUnsupportedSymbol when `sym` is not a generator.
  std::uint32_t id(const GeneratorSymbol& sym) const;
  Letter letter(const GeneratorSymbol& sym, bool inverse = false) const {
    return {id(sym), inverse};
  }

  /// Same generators, extra relators appended (then normalized).
  Presentation with_relators(const std::vector<Word>& extra, std::string family) const;

  std::string symbol_name(std::uint32_t g) const;
  std::string word_to_string(const Word& w) const;
  /// "g<k> := <name>" per generator, then one relator per line.
  std::string dump() const;

  void check_word(const Word& w) const;

 private:
  Meta meta_;
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<GeneratorSymbol> generators_;
  std::vector<Word> relators_;
  std::map<GeneratorSymbol, std::uint32_t> index_;
};

std::string symbol_to_string(const GeneratorSymbol& sym, const FiniteGroup* group, std::uint32_t n);

/// A letter of the textual word syntax: `(12)_a`, `h_{13}(g2)`, `s_2(a)`,
/// `(12)`, optionally followed by `^-1`. Labels are left unresolved.
struct ParsedLetter {
  SymbolKind kind = SymbolKind::kTransposition;
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::string label;
  bool inverse = false;
};

std::vector<ParsedLetter> parse_word_text(std::string_view text, std::uint32_t n);
/// Resolves labels against `p`'s group and looks the symbols up.
Word resolve_word(const Presentation& p, const std::vector<ParsedLetter>& letters);

}  // namespace parasym
