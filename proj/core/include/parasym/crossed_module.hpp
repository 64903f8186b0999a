#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "parasym/coset_enumeration.hpp"
#include "parasym/families.hpp"
#include "parasym/report.hpp"
#include "parasym/wreath.hpp"

namespace parasym {

/// The crossed module μ: M -> G wr S_n with M the amalgam of copies S_n^{(g)}.
/// G wr S_n acts on M by (s_g)^{(h,t)} = (s^t)_{(gh)^t}, where (ij)^t = (t(i) t(j)).
class AmalgamModule {
 public:
  /// nullopt when the amalgam does not enumerate within the options.
  static std::optional<AmalgamModule> build(std::uint32_t n, GroupPtr g, const EnumerationOptions& options = {});

  const Presentation& presentation() const noexcept { return presentation_; }
  const EnumeratedGroup& group() const noexcept { return group_; }
  const WreathProduct& wreath() const noexcept { return wreath_; }

  /// Generator index of the image of generator m under x.
  std::uint32_t act(std::uint32_t m, const WreathElement& x) const;

  /// Every generator of G wr S_n induces a bijection of generators that
  /// sends each relator to 1, i.e. an automorphism of M.
  CheckResult action_well_defined() const;
  /// μ(m^x) = μ(m)^x for all generators m of M and x of G wr S_n.
  CheckResult cm1() const;
  /// m'^-1 m m' = m^{μ(m')} for all pairs of generators of M.
  CheckResult cm2() const;
  /// t_1^-1 s_g t_1 = (s^t)_{g^t} for all pairs of distinct transpositions s, t.
  CheckResult peiffer_simple() const;
  /// Every element of ker μ commutes with every generator of M.
  CheckResult kernel_central() const;

 private:
  AmalgamModule(Presentation p, EnumeratedGroup eg);

  std::uint32_t lookup(std::uint32_t i, std::uint32_t j, std::uint64_t copy) const;

  Presentation presentation_;
  EnumeratedGroup group_;
  WreathProduct wreath_;
  std::uint64_t copies_ = 0;
  std::vector<std::uint32_t> index_;  // (i, j, copy) -> generator
};

/// (s_g)^x for an amalgam generator symbol.
GeneratorSymbol act_on_copy_generator(const GeneratorSymbol& sym, const WreathElement& x, const WreathProduct& w);

}  // namespace parasym
