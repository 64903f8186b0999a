#include "parasym/crossed_module.hpp"

#include <unordered_set>

#include "parasym/error.hpp"
#include "parasym/morphisms.hpp"

namespace parasym {

GeneratorSymbol act_on_copy_generator(const GeneratorSymbol& sym, const WreathElement& x, const WreathProduct& w) {
  if (sym.kind != SymbolKind::kCopy) throw Error(ErrorKind::kUnsupportedSymbol, "not an amalgam generator");
  const FiniteGroup& G = w.base();
  const std::uint32_t n = w.degree();
  const Tuple g = tuple_from_index(G, n, sym.copy);
  const Tuple moved = w.act(tuple_multiply(G, g, x.vector), x.perm);
  return GeneratorSymbol::copy_transposition(x.perm(sym.i - 1) + 1, x.perm(sym.j - 1) + 1, tuple_index(G, moved));
}

std::optional<AmalgamModule> AmalgamModule::build(std::uint32_t n, GroupPtr g, const EnumerationOptions& options) {
  Presentation p = amalgam_presentation(n, std::move(g));
  auto eg = enumerate_group(p, options);
  if (!eg) return std::nullopt;
  return AmalgamModule(std::move(p), std::move(*eg));
}

AmalgamModule::AmalgamModule(Presentation p, EnumeratedGroup eg)
    : presentation_(std::move(p)), group_(std::move(eg)), wreath_(*presentation_.group(), presentation_.meta().n) {
  const std::uint32_t n = presentation_.meta().n;
  copies_ = 1;
  for (std::uint32_t k = 0; k < n; ++k) copies_ *= presentation_.group()->order();
  index_.assign(static_cast<std::size_t>(n) * n * copies_, CosetTable::kUndefined);
  for (std::uint32_t m = 0; m < presentation_.generator_count(); ++m) {
    const auto& s = presentation_.symbol(m);
    index_[((s.i - 1) * n + (s.j - 1)) * copies_ + s.copy] = m;
  }
}

std::uint32_t AmalgamModule::lookup(std::uint32_t i, std::uint32_t j, std::uint64_t copy) const {
  const std::uint32_t n = presentation_.meta().n;
  return index_[((i - 1) * n + (j - 1)) * copies_ + copy];
}

std::uint32_t AmalgamModule::act(std::uint32_t m, const WreathElement& x) const {
  const auto s = act_on_copy_generator(presentation_.symbol(m), x, wreath_);
  return lookup(s.i, s.j, s.copy);
}

CheckResult AmalgamModule::action_well_defined() const {
  const Presentation& p = presentation_;
  for (const WreathElement& x : wreath_.generators()) {
    std::vector<std::uint32_t> image(p.generator_count());
    std::unordered_set<std::uint32_t> hit;
    for (std::uint32_t m = 0; m < p.generator_count(); ++m) {
      image[m] = act(m, x);
      hit.insert(image[m]);
    }
    const std::string by = "x=(" + std::to_string(tuple_index(wreath_.base(), x.vector)) + "," + x.perm.to_string() + ")";
    if (hit.size() != p.generator_count()) return CheckResult::fail(by + " is not a bijection on generators");
    for (const Word& r : p.relators()) {
      Word w;
      for (const Letter& l : r) w.push_back({image[l.gen], l.inverse});
      if (group_.element(w) != 0) return CheckResult::fail(by + " breaks relator " + p.word_to_string(r));
    }
  }
  return CheckResult::pass();
}

CheckResult AmalgamModule::cm1() const {
  const Presentation& p = presentation_;
  const auto mu = mu_images(p, wreath_);
  for (const WreathElement& x : wreath_.generators())
    for (std::uint32_t m = 0; m < p.generator_count(); ++m)
      if (mu[act(m, x)] != wreath_.conjugate(mu[m], x))
        return CheckResult::fail("m=" + p.symbol_name(m) + " x=(" +
                                 std::to_string(tuple_index(wreath_.base(), x.vector)) + "," + x.perm.to_string() + ")");
  return CheckResult::pass();
}

CheckResult AmalgamModule::cm2() const {
  const Presentation& p = presentation_;
  const auto mu = mu_images(p, wreath_);
  for (std::uint32_t m2 = 0; m2 < p.generator_count(); ++m2) {
    for (std::uint32_t m = 0; m < p.generator_count(); ++m) {
      const std::uint32_t lhs = group_.element({inv(m2), gen(m), gen(m2)});
      if (lhs != group_.generator(act(m, mu[m2])))
        return CheckResult::fail("m=" + p.symbol_name(m) + " m'=" + p.symbol_name(m2));
    }
  }
  return CheckResult::pass();
}

CheckResult AmalgamModule::peiffer_simple() const {
  const Presentation& p = presentation_;
  const FiniteGroup& G = wreath_.base();
  const std::uint32_t n = p.meta().n;
  for (std::uint32_t m2 = 0; m2 < p.generator_count(); ++m2) {
    const auto& t = p.symbol(m2);
    if (t.copy != 0) continue;  // t_1, the copy at the identity tuple
    const Permutation tp = Permutation::transposition(n, t.i - 1, t.j - 1);
    for (std::uint32_t m = 0; m < p.generator_count(); ++m) {
      const auto& s = p.symbol(m);
      if ((s.i == t.i && s.j == t.j) || (s.i == t.j && s.j == t.i)) continue;
      const Tuple gt = wreath_.act(tuple_from_index(G, n, s.copy), tp);
      const std::uint32_t rhs = lookup(tp(s.i - 1) + 1, tp(s.j - 1) + 1, tuple_index(G, gt));
      if (group_.element({inv(m2), gen(m), gen(m2)}) != group_.generator(rhs))
        return CheckResult::fail("s=" + p.symbol_name(m) + " t=" + p.symbol_name(m2));
    }
  }
  return CheckResult::pass();
}

CheckResult AmalgamModule::kernel_central() const {
  const KernelResult k = kernel_of_mu(presentation_, group_);
  if (!k.central) return CheckResult::fail("a kernel element is not central");
  return CheckResult::pass("kernel=" + k.invariants.to_string());
}

}  // namespace parasym
