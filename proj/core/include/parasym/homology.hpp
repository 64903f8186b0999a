#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "parasym/abelian.hpp"
#include "parasym/coset_enumeration.hpp"
#include "parasym/families.hpp"

namespace parasym {

/// H_2 of a finite abelian group with invariant factors n_1 | ... | n_k:
/// the sum over i < j of Z/gcd(n_i, n_j) = Z/n_i. Throws kMalformedChain if
/// the input is not a divisibility chain of factors >= 2.
AbelianInvariants schur_abelian(const AbelianInvariants& chain);

struct ExteriorSquare {
  std::uint64_t order = 0;
  /// |[G, G]|, the image of w(g, h) -> [g, h].
  std::uint64_t commutator_image_order = 0;
  /// Kernel of the commutator map, i.e. H_2(G).
  AbelianInvariants kernel;
};

/// Enumerates G ^ G and walks it carrying each element's image under
/// w(g, h) -> g^-1 h^-1 g h. Throws kNotAGroup if that map does not kill the
/// relators (a convention error); nullopt on capacity.
std::optional<ExteriorSquare> exterior_square_group(GroupPtr g, const EnumerationOptions& options = {});

struct CSymbolCheck {
  std::uint64_t hs_order = 0;
  std::uint64_t subgroup_order = 0;
  std::uint64_t exterior_order = 0;
  bool j_independent = false;
  std::string witness;
  bool ok() const { return j_independent && subgroup_order == exterior_order; }
};

/// In HS_n(G): the subgroup generated by c_1j(u, v) = h_1j(u) h_1j(v) h_1j(vu)^-1
/// over all j, u, v has order |G ^ G|, and c_kj(u, v) does not depend on j.
std::optional<CSymbolCheck> c_symbol_subgroup_check(std::uint32_t n, GroupPtr g,
                                                    const EnumerationOptions& options = {});

struct SchurReport {
  std::string group;
  std::optional<AbelianInvariants> via_kernel;
  std::optional<AbelianInvariants> via_exterior;
  std::optional<AbelianInvariants> via_abelian_formula;
  bool consistent = false;
};

enum class SchurMethod { kKernel, kExterior, kAbelian, kAll };

/// Runs the requested methods; a method that hits the capacity leaves its
/// field empty. Throws kMethodInapplicable for the abelian formula on a
/// nonabelian group.
SchurReport schur_report(std::uint32_t n, GroupPtr g, const std::string& name, SchurMethod method = SchurMethod::kAll,
                         const EnumerationOptions& options = {});

}  // namespace parasym
