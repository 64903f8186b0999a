#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <vector>

#include "parasym/abelian.hpp"
#include "parasym/finite_group.hpp"
#include "parasym/permutation.hpp"
#include "parasym/presentation.hpp"

namespace parasym {

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

/// s_i(a), 1 <= i <= n-1, with the square, braid-type and far-commuting relators.
Presentation coxeter_presentation(std::uint32_t n, GroupPtr g);

/// (ij)_a for ordered i != j: involutions, (ij)_a^{(jk)_b} = (ik)_{ab},
/// disjoint pairs commute, (ij)_a = (ji)_{a^-1}.
Presentation transposition_presentation(std::uint32_t n, GroupPtr g);

/// S_n(t, G): (ij)_a with i < j, j - i <= t; the mixed Coxeter-type relators
/// restricted to generators that exist for this t.
Presentation interpolating_presentation(std::uint32_t n, std::uint32_t t, GroupPtr g);

/// Free product of copies S_n^(g), g in G^n, amalgamated by s_g = s_h
/// whenever s fixes h g^-1. `size_cap` bounds |G|^n * n!.
Presentation amalgam_presentation(std::uint32_t n, GroupPtr g, std::uint64_t size_cap = 5000);

/// Number of ordered pairs (g, h) with h g^-1 fixed by s, for each s in
/// Permutation::all(n) order. These are the identification relators before
/// reduction and deduplication.
std::vector<std::uint64_t> amalgam_identification_counts(std::uint32_t n, const FiniteGroup& g);

/// Transposition word for s used in the amalgam relators (0-based points).
std::vector<std::pair<std::uint32_t, std::uint32_t>> amalgam_factorization(const Permutation& s);

/// S_n on all transpositions (ij), i != j.
Presentation reflection_presentation_sn(std::uint32_t n);

enum class HsRelation { kR0, kR1, kR2, kR3, kR4 };
enum class HnRelation { kH1, kH2, kH3, kH4, kH5 };

/// HS_n(G) on h_ij(a) with relators R0-R4 (or a subset).
Presentation hs_presentation(std::uint32_t n, GroupPtr g,
                             const std::set<HsRelation>& include = {HsRelation::kR0, HsRelation::kR1,
                                                                    HsRelation::kR2, HsRelation::kR3,
                                                                    HsRelation::kR4});

/// H_n(G) on h_ij(u) with the requested subset of H1-H5.
Presentation hn_presentation(std::uint32_t n, GroupPtr g,
                             const std::set<HnRelation>& include = {HnRelation::kH1, HnRelation::kH2,
                                                                    HnRelation::kH3, HnRelation::kH4,
                                                                    HnRelation::kH5});

/// Relator words of a family over an existing h-alphabet presentation.
std::vector<Word> hs_relators(const Presentation& alphabet, HsRelation rel);
std::vector<Word> hn_relators(const Presentation& alphabet, HnRelation rel);

/// G ^ G on w(g, h) with w(g,g), w(gg',h) = w(g^g',h^g') w(g',h),
/// w(g,hh') = w(g,h') w(g^h',h^h'), x^y = y^-1 x y.
Presentation exterior_square_presentation(GroupPtr g);

/// Invariants of the abelianization, via integer Smith normal form of the
/// relator exponent matrix.
AbelianInvariants abelian_invariants_of_presentation(const Presentation& p);

}  // namespace parasym
