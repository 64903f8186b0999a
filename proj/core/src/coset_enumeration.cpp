#include "parasym/coset_enumeration.hpp"

#include <algorithm>
#include <sstream>

#include "parasym/error.hpp"

namespace parasym {

CosetTable::CosetTable(std::uint32_t generator_count, std::uint32_t coset_count,
                       std::vector<std::uint32_t> rows, EnumerationStatus status)
    : generators_(generator_count), cosets_(coset_count), rows_(std::move(rows)), status_(status) {}

std::uint32_t CosetTable::trace(std::uint32_t coset, const Word& w) const {
  if (!complete()) throw Error(ErrorKind::kIncompleteTable, "trace on an incomplete table");
  for (const Letter& l : w) {
    if (l.gen >= generators_) throw Error(ErrorKind::kMalformedWord, "letter outside the table");
    coset = image(coset, l);
    if (coset == kUndefined) return kUndefined;
  }
  return coset;
}

std::string CosetTable::dump() const {
  std::ostringstream out;
  const std::size_t width = 2 * static_cast<std::size_t>(generators_);
  for (std::uint32_t c = 0; c < cosets_; ++c) {
    for (std::size_t k = 0; k < width; ++k) {
      if (k) out << ' ';
      std::uint32_t v = rows_[c * width + k];
      if (v == kUndefined)
        out << '-';
      else
        out << v;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

constexpr std::uint32_t kNone = CosetTable::kUndefined;

enum class Scan { kOk, kFull };

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup, const EnumerationOptions& opt)
      : gens_(static_cast<std::uint32_t>(p.generator_count())) {
    // Generators with a relator x^2 share one column for x and x^-1.
    std::vector<char> involutory(gens_, 0);
    for (const Word& r : p.relators())
      if (r.size() == 2 && r[0] == r[1]) involutory[r[0].gen] = 1;
    fwd_.resize(gens_);
    bwd_.resize(gens_);
    for (std::uint32_t g = 0; g < gens_; ++g) {
      fwd_[g] = ncols_++;
      bwd_[g] = involutory[g] ? fwd_[g] : ncols_++;
    }
    inverse_col_.resize(ncols_);
    for (std::uint32_t g = 0; g < gens_; ++g) {
      inverse_col_[fwd_[g]] = bwd_[g];
      inverse_col_[bwd_[g]] = fwd_[g];
    }
    for (const Word& r : p.relators()) {
      if (r.size() == 2 && r[0] == r[1] && involutory[r[0].gen]) continue;
      relators_.push_back(columns(r, p));
    }
    std::stable_sort(relators_.begin(), relators_.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (const Word& w : subgroup) subgroup_.push_back(columns(w, p));

    const std::uint64_t row_bytes = static_cast<std::uint64_t>(ncols_) * 4 + 4;
    capacity_ = std::max<std::uint64_t>(1, std::min<std::uint64_t>(opt.max_cosets, opt.memory_limit_bytes / row_bytes));
    capacity_ = std::min<std::uint64_t>(capacity_, kNone - 1);
  }

  CosetTable run() {
    new_coset();
    for (const auto& w : subgroup_) {
      while (scan_and_fill(0, w) == Scan::kFull) {
        std::uint32_t pos = 0;
        if (!make_room(pos)) return overflow();
      }
    }
    std::uint32_t c = 0;
    while (c < next_) {
      if (!alive(c)) {
        ++c;
        continue;
      }
      bool full = false;
      for (const auto& r : relators_) {
        if (scan_and_fill(c, r) == Scan::kFull) {
          full = true;
          break;
        }
        if (!alive(c)) break;
      }
      if (!full && alive(c)) {
        for (std::uint32_t col = 0; col < ncols_; ++col)
          if (at(c, col) == kNone && !define(c, col)) {
            full = true;
            break;
          }
      }
      if (full) {
        if (!make_room(c)) return overflow();
        continue;
      }
      ++c;
    }
    return finish();
  }

 private:
  std::vector<std::uint32_t> columns(const Word& w, const Presentation& p) {
    p.check_word(w);
    std::vector<std::uint32_t> cols;
    cols.reserve(w.size());
    for (const Letter& l : w) cols.push_back(l.inverse ? bwd_[l.gen] : fwd_[l.gen]);
    return cols;
  }

  std::uint32_t& at(std::uint32_t c, std::uint32_t col) {
    return table_[static_cast<std::size_t>(c) * ncols_ + col];
  }
  bool alive(std::uint32_t c) const { return parent_[c] == c; }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::uint32_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void new_coset() {
    const std::uint32_t k = next_++;
    table_.resize(static_cast<std::size_t>(next_) * ncols_, kNone);
    parent_.push_back(k);
    ++live_;
    ++total_defined_;
    max_live_ = std::max(max_live_, live_);
  }

  bool define(std::uint32_t f, std::uint32_t col) {
    if (next_ >= capacity_) return false;
    const std::uint32_t k = next_;
    new_coset();
    at(f, col) = k;
    at(k, inverse_col_[col]) = f;
    return true;
  }

  void merge(std::uint32_t k, std::uint32_t l) {
    const std::uint32_t a = rep(k), b = rep(l);
    if (a == b) return;
    const std::uint32_t lo = std::min(a, b), hi = std::max(a, b);
    parent_[hi] = lo;
    queue_.push_back(hi);
    --live_;
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      const std::uint32_t g = queue_[q];
      for (std::uint32_t col = 0; col < ncols_; ++col) {
        const std::uint32_t d = at(g, col);
        if (d == kNone) continue;
        const std::uint32_t ic = inverse_col_[col];
        at(d, ic) = kNone;
        const std::uint32_t mu = rep(g), nu = rep(d);
        if (at(mu, col) != kNone)
          merge(nu, at(mu, col));
        else if (at(nu, ic) != kNone)
          merge(mu, at(nu, ic));
        else {
          at(mu, col) = nu;
          at(nu, ic) = mu;
        }
      }
    }
    queue_.clear();
  }

  // Scans relator r at coset c, defining new cosets to close it when
  // `fill` is set; otherwise only deductions and coincidences are made.
  Scan scan(std::uint32_t c, const std::vector<std::uint32_t>& r, bool fill) {
    std::uint32_t f = c, b = c;
    std::size_t i = 0, j = r.size();
    for (;;) {
      while (i < j && at(f, r[i]) != kNone) f = at(f, r[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return Scan::kOk;
      }
      while (j > i && at(b, inverse_col_[r[j - 1]]) != kNone) b = at(b, inverse_col_[r[--j]]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return Scan::kOk;
      }
      if (j == i + 1) {
        at(f, r[i]) = b;
        at(b, inverse_col_[r[i]]) = f;
        return Scan::kOk;
      }
      if (!fill) return Scan::kOk;
      if (!define(f, r[i])) return Scan::kFull;
    }
  }

  Scan scan_and_fill(std::uint32_t c, const std::vector<std::uint32_t>& r) { return scan(c, r, true); }

  void lookahead() {
    for (std::uint32_t d = 0; d < next_; ++d) {
      if (!alive(d)) continue;
      for (const auto& r : relators_) {
        scan(d, r, false);
        if (!alive(d)) break;
      }
    }
  }

  // Renumbers live cosets in order; `pos` becomes the index of the first
  // live coset at or after its old value.
  void compact(std::uint32_t& pos) {
    std::vector<std::uint32_t> remap(next_, kNone);
    std::uint32_t k = 0;
    std::uint32_t new_pos = kNone;
    for (std::uint32_t c = 0; c < next_; ++c) {
      if (c == pos) new_pos = k;
      if (alive(c)) remap[c] = k++;
    }
    if (new_pos == kNone) new_pos = k;
    for (std::uint32_t c = 0; c < next_; ++c) {
      if (!alive(c)) continue;
      const std::uint32_t to = remap[c];
      for (std::uint32_t col = 0; col < ncols_; ++col) {
        const std::uint32_t v = at(c, col);
        at(to, col) = v == kNone ? kNone : remap[v];
      }
    }
    next_ = k;
    table_.resize(static_cast<std::size_t>(next_) * ncols_);
    parent_.resize(next_);
    for (std::uint32_t c = 0; c < next_; ++c) parent_[c] = c;
    pos = new_pos;
  }

  bool make_room(std::uint32_t& pos) {
    compact(pos);
    if (next_ + capacity_ / 64 < capacity_ && next_ < capacity_) return true;
    lookahead();
    compact(pos);
    return next_ < capacity_;
  }

  CosetTable overflow() {
    CosetTable t(gens_, static_cast<std::uint32_t>(live_), {}, EnumerationStatus::kCapacityExceeded);
    t.total_defined = total_defined_;
    t.max_live = max_live_;
    return t;
  }

  CosetTable finish() {
    std::uint32_t pos = 0;
    compact(pos);
    // Breadth-first renumbering from coset 0 over the output columns.
    std::vector<std::uint32_t> order{0};
    std::vector<std::uint32_t> number(next_, kNone);
    number[0] = 0;
    for (std::size_t h = 0; h < order.size(); ++h)
      for (std::uint32_t g = 0; g < gens_; ++g)
        for (std::uint32_t col : {fwd_[g], bwd_[g]}) {
          const std::uint32_t d = at(order[h], col);
          if (number[d] == kNone) {
            number[d] = static_cast<std::uint32_t>(order.size());
            order.push_back(d);
          }
        }
    const std::size_t width = 2 * static_cast<std::size_t>(gens_);
    std::vector<std::uint32_t> rows(order.size() * width);
    for (std::size_t h = 0; h < order.size(); ++h)
      for (std::uint32_t g = 0; g < gens_; ++g) {
        rows[h * width + 2 * g] = number[at(order[h], fwd_[g])];
        rows[h * width + 2 * g + 1] = number[at(order[h], bwd_[g])];
      }
    CosetTable t(gens_, static_cast<std::uint32_t>(order.size()), std::move(rows),
                 EnumerationStatus::kComplete);
    t.total_defined = total_defined_;
    t.max_live = max_live_;
    return t;
  }

  std::uint32_t gens_;
  std::uint32_t ncols_ = 0;
  std::vector<std::uint32_t> fwd_, bwd_, inverse_col_;
  std::vector<std::vector<std::uint32_t>> relators_;
  std::vector<std::vector<std::uint32_t>> subgroup_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> queue_;
  std::uint32_t next_ = 0;
  std::uint64_t capacity_ = 0;
  std::uint64_t live_ = 0;
  std::uint64_t total_defined_ = 0;
  std::uint64_t max_live_ = 0;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                        const EnumerationOptions& options) {
  if (options.max_cosets < 1) throw Error(ErrorKind::kOutOfRange, "max_cosets must be >= 1");
  return Enumerator(p, subgroup, options).run();
}

PermutationRep permutation_rep(const CosetTable& t, const Presentation& p) {
  if (!t.complete()) throw Error(ErrorKind::kIncompleteTable, "permutation_rep needs a complete table");
  if (t.generator_count() != p.generator_count())
    throw Error(ErrorKind::kMalformedWord, "table and presentation disagree on generators");
  PermutationRep rep;
  rep.degree = t.coset_count();
  for (std::uint32_t g = 0; g < t.generator_count(); ++g) {
    std::vector<std::uint32_t> im(rep.degree);
    for (std::uint32_t c = 0; c < rep.degree; ++c) im[c] = t.image(c, gen(g));
    rep.images.emplace_back(std::move(im));
  }
  for (const Word& r : p.relators())
    if (!evaluate_word(rep, r).is_identity())
      throw Error(ErrorKind::kIncompleteTable, "relator " + p.word_to_string(r) + " acts nontrivially");
  return rep;
}

Permutation evaluate_word(const PermutationRep& rep, const Word& w) {
  Permutation result = Permutation::identity(rep.degree);
  for (const Letter& l : w) {
    if (l.gen >= rep.images.size()) throw Error(ErrorKind::kMalformedWord, "unknown-generator");
    result = result * (l.inverse ? rep.images[l.gen].inverse() : rep.images[l.gen]);
  }
  return result;
}

EnumeratedGroup::EnumeratedGroup(CosetTable table) : table_(std::move(table)) {
  if (!table_.complete()) throw Error(ErrorKind::kIncompleteTable, "EnumeratedGroup needs a complete table");
  words_.assign(table_.coset_count(), {});
  std::vector<char> seen(table_.coset_count(), 0);
  std::vector<std::uint32_t> order{0};
  seen[0] = 1;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (std::uint32_t g = 0; g < table_.generator_count(); ++g)
      for (bool iv : {false, true}) {
        const std::uint32_t d = table_.image(order[h], {g, iv});
        if (seen[d]) continue;
        seen[d] = 1;
        words_[d] = words_[order[h]];
        words_[d].push_back({g, iv});
        order.push_back(d);
      }
}

std::uint64_t EnumeratedGroup::element_order(std::uint32_t x) const {
  std::uint64_t k = 1;
  for (std::uint32_t y = x; y != 0; y = multiply(y, x)) ++k;
  return k;
}

std::optional<EnumeratedGroup> enumerate_group(const Presentation& p, const EnumerationOptions& options) {
  CosetTable t = todd_coxeter(p, {}, options);
  if (!t.complete()) return std::nullopt;
  return EnumeratedGroup(std::move(t));
}

ConsequenceResult is_consequence(const EnumeratedGroup& g, const Word& w) {
  const std::uint32_t c = g.element(w);
  if (c == 0) return {Consequence::kYes, std::nullopt};
  return {Consequence::kNo, c};
}

ConsequenceResult is_consequence(const Presentation& p, const Word& w, const EnumerationOptions& options) {
  p.check_word(w);
  if (auto g = enumerate_group(p, options)) return is_consequence(*g, w);
  // The group is too big (or infinite). A word that survives in a finite
  // quotient is still nontrivial, so try the elementary abelian quotients.
  for (std::uint32_t prime : {2u, 3u}) {
    std::vector<Word> extra;
    for (std::uint32_t x = 0; x < p.generator_count(); ++x) {
      extra.push_back(Word(prime, gen(x)));
      for (std::uint32_t y = x + 1; y < p.generator_count(); ++y) extra.push_back(commutator_word({gen(x)}, {gen(y)}));
    }
    const auto quotient = enumerate_group(p.with_relators(extra, p.meta().family), options);
    if (!quotient) continue;
    if (auto r = is_consequence(*quotient, w); r.verdict == Consequence::kNo) return r;
  }
  return {Consequence::kTimeout, std::nullopt};
}

const char* to_string(Consequence c) {
  switch (c) {
    case Consequence::kYes: return "yes";
    case Consequence::kNo: return "no";
    case Consequence::kTimeout: return "timeout";
  }
  return "?";
}

}  // namespace parasym
