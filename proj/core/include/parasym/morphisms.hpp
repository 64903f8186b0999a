#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parasym/abelian.hpp"
#include "parasym/coset_enumeration.hpp"
#include "parasym/error.hpp"
#include "parasym/families.hpp"
#include "parasym/presentation.hpp"
#include "parasym/wreath.hpp"

namespace parasym {

/// μ on a single generator symbol over (n, G):
///   (ij)_a -> (d_ij(a), (ij)),  s_i(a) -> μ((i,i+1)_a),
///   (ij)^{(g)} -> (ij)^g = (d_ij(g_i^-1 g_j), (ij)),  h_ij(a) -> (d_ij(a), 1),
///   (ij) -> (1, (ij)).
/// Throws kUnsupportedSymbol for other kinds.
WreathElement mu_of_generator(const GeneratorSymbol& sym, const WreathProduct& w);

/// μ on every generator of p, in generator order.
std::vector<WreathElement> mu_images(const Presentation& p, const WreathProduct& w);

struct HomomorphismCheck {
  bool ok = true;
  /// Index into p.relators() of the first relator that is not sent to 1.
  std::optional<std::size_t> failing_relator;
};

/// Checks that generator images into a concrete group kill every relator.
template <typename T, typename Multiply, typename Inverse, typename IsIdentity>
HomomorphismCheck verify_homomorphism(const Presentation& p, const std::vector<T>& images,
                                      const T& identity, Multiply multiply, Inverse inverse,
                                      IsIdentity is_identity) {
  if (images.size() != p.generator_count())
    throw Error(ErrorKind::kMalformedWord, "one image per generator is required");
  std::vector<T> inverses;
  inverses.reserve(images.size());
  for (const T& x : images) inverses.push_back(inverse(x));
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    T acc = identity;
    for (const Letter& l : p.relators()[r]) acc = multiply(acc, l.inverse ? inverses[l.gen] : images[l.gen]);
    if (!is_identity(acc)) return {false, r};
  }
  return {};
}

HomomorphismCheck verify_homomorphism(const Presentation& p, const WreathProduct& w,
                                      const std::vector<WreathElement>& images);
HomomorphismCheck verify_homomorphism(const Presentation& p, const FiniteGroup& g,
                                      const std::vector<Element>& images);
HomomorphismCheck verify_homomorphism(const Presentation& p, const std::vector<Permutation>& images);

/// A generator map between two presentations: image word per source generator.
struct WordMap {
  const Presentation* source = nullptr;
  const Presentation* target = nullptr;
  std::vector<Word> images;

  Word apply(const Word& w) const;
};

enum class CertificateStatus { kValid, kInvalid, kInconclusive };

struct IsoCertificate {
  CertificateStatus status = CertificateStatus::kInconclusive;
  std::uint64_t source_order = 0;
  std::uint64_t target_order = 0;
  bool forward_hom = false;
  bool backward_hom = false;
  bool roundtrip_ok = false;
  /// First violated condition, empty when valid.
  std::string failure;

  bool valid() const { return status == CertificateStatus::kValid; }
};

/// Certificate that `forward` and `backward` are mutually inverse
/// isomorphisms: both presentations enumerate, each map sends every relator
/// to 1, the orders agree, and both round trips fix every generator.
IsoCertificate verify_isomorphism(const WordMap& forward, const WordMap& backward,
                                  const EnumerationOptions& options = {});

// The explicit maps between the presentation families.

/// s_i(a) <-> (i,i+1)_a between coxeter and interpolating(t = 1).
WordMap coxeter_to_interpolating(const Presentation& cox, const Presentation& s1);
WordMap interpolating_to_coxeter(const Presentation& s1, const Presentation& cox);
/// f_t: S_n(t) -> S_n(t+1), the embedding of generators.
WordMap interpolating_embedding(const Presentation& st, const Presentation& st1);
/// g_t: S_n(t+1) -> S_n(t); (ij)_a with j - i = t + 1 goes to
/// (kj)_1^-1 (ik)_a (kj)_1 with k = i + 1.
WordMap interpolating_retraction(const Presentation& st1, const Presentation& st);
/// θ: (ij)_a for i < j, (ji)_{a^-1} for i > j; and the embedding back.
WordMap transposition_to_interpolating(const Presentation& tr, const Presentation& top);
WordMap interpolating_to_transposition(const Presentation& top, const Presentation& tr);
/// φ: (ij)_a -> (ij)^{(a[j])};  ψ: (ij)^{(g)} -> (ij)_{g_i^-1 g_j}.
WordMap transposition_to_amalgam(const Presentation& tr, const Presentation& am);
WordMap amalgam_to_transposition(const Presentation& am, const Presentation& tr);
/// Identity on generators between presentations with the same alphabet.
WordMap same_alphabet_map(const Presentation& from, const Presentation& to);

/// Order of the closure of μ(generators) in G wr S_n.
std::uint64_t image_subgroup_order(std::uint32_t n, GroupPtr g);

struct KernelResult {
  std::uint64_t group_order = 0;
  std::uint64_t image_order = 0;
  /// Kernel elements as elements (cosets) of the enumerated group.
  std::vector<std::uint32_t> elements;
  AbelianInvariants invariants;
  bool central = false;
};

/// Kernel of μ on transposition_presentation(n, G): a breadth-first walk of
/// the enumerated group carrying each element's μ-image. nullopt if the
/// enumeration exceeds the capacity.
std::optional<KernelResult> kernel_of_mu(std::uint32_t n, GroupPtr g, const EnumerationOptions& options = {});
/// Same walk over an already enumerated group of `p`.
KernelResult kernel_of_mu(const Presentation& p, const EnumeratedGroup& eg);

/// Invariants of an abelian subgroup of an enumerated group.
AbelianInvariants abelian_invariants_in(const EnumeratedGroup& eg, const std::vector<std::uint32_t>& elements);
/// Closure of `generators` inside an enumerated group.
std::vector<std::uint32_t> subgroup_of(const EnumeratedGroup& eg, const std::vector<std::uint32_t>& generators);
bool commutes_with_generators(const EnumeratedGroup& eg, std::uint32_t x);

/// Naturality: a group inclusion a -> b (element map `inclusion`) induces
/// S_n(a) -> S_n(b); checks that it maps ker μ into ker μ injectively.
struct NaturalityResult {
  bool homomorphism = false;
  bool into_kernel = false;
  bool injective = false;
  std::uint64_t source_kernel = 0;
  std::uint64_t target_kernel = 0;
  bool ok() const { return homomorphism && into_kernel && injective; }
};
std::optional<NaturalityResult> kernel_naturality(std::uint32_t n, GroupPtr a, GroupPtr b,
                                                  const std::vector<Element>& inclusion,
                                                  const EnumerationOptions& options = {});

/// One verdict per target relator, tested against `source`.
std::vector<Consequence> verify_implication(const Presentation& source, const std::vector<Word>& targets,
                                            const EnumerationOptions& options = {});

struct SplitCheck {
  std::uint64_t group_order = 0;
  std::uint64_t sn_order = 0;
  /// Index of the subgroup generated by all h_ij(a) = (ij)_a (ij)_e.
  std::uint64_t hs_index = 0;
  std::uint64_t hs_order = 0;
  std::uint64_t hs_standalone_order = 0;
  bool section_ok = false;
  bool ok() const;
};

/// |S_n(G)| = |HS_n(G)| * n!, with |HS_n(G)| from the index of the h-subgroup
/// and from hs_presentation, and π ∘ ι = 1 for the section (ij) -> (ij)_e.
std::optional<SplitCheck> verify_split_decomposition(std::uint32_t n, GroupPtr g,
                                                     const EnumerationOptions& options = {});

}  // namespace parasym
