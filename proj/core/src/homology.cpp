#include "parasym/homology.hpp"

#include <numeric>
#include <unordered_set>

#include "parasym/error.hpp"
#include "parasym/morphisms.hpp"

namespace parasym {

AbelianInvariants schur_abelian(const AbelianInvariants& chain) {
  const auto& f = chain.factors;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] < 2) throw Error(ErrorKind::kMalformedChain, "factors must be >= 2: " + chain.to_string());
    if (k && f[k] % f[k - 1] != 0) throw Error(ErrorKind::kMalformedChain, "not a divisibility chain: " + chain.to_string());
  }
  std::vector<std::uint64_t> orders;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) orders.push_back(std::gcd(f[i], f[j]));
  return AbelianInvariants::from_cyclic_orders(orders);
}

std::optional<ExteriorSquare> exterior_square_group(GroupPtr g, const EnumerationOptions& options) {
  const FiniteGroup& G = *g;
  const Presentation p = exterior_square_presentation(g);
  std::vector<Element> images;
  for (const auto& s : p.generators()) images.push_back(G.commutator(s.a, s.b));
  if (auto h = verify_homomorphism(p, G, images); !h.ok)
    throw Error(ErrorKind::kNotAGroup,
                "commutator map does not kill " + p.word_to_string(p.relators()[*h.failing_relator]));
  auto eg = enumerate_group(p, options);
  if (!eg) return std::nullopt;
  std::vector<Element> image(eg->order(), 0);
  std::vector<char> seen(eg->order(), 0);
  std::vector<std::uint32_t> order{0};
  seen[0] = 1;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (std::uint32_t k = 0; k < eg->generator_count(); ++k) {
      const std::uint32_t y = eg->act(order[h], gen(k));
      if (seen[y]) continue;
      seen[y] = 1;
      image[y] = G.multiply(image[order[h]], images[k]);
      order.push_back(y);
    }
  ExteriorSquare ex;
  ex.order = eg->order();
  std::unordered_set<Element> distinct(image.begin(), image.end());
  ex.commutator_image_order = distinct.size();
  std::vector<std::uint32_t> kernel;
  for (std::uint32_t x = 0; x < eg->order(); ++x)
    if (image[x] == 0) kernel.push_back(x);
  ex.kernel = abelian_invariants_in(*eg, kernel);
  return ex;
}

std::optional<CSymbolCheck> c_symbol_subgroup_check(std::uint32_t n, GroupPtr g, const EnumerationOptions& options) {
  const FiniteGroup& G = *g;
  const Presentation hs = hs_presentation(n, g);
  auto eg = enumerate_group(hs, options);
  if (!eg) return std::nullopt;
  auto ex = exterior_square_group(g, options);
  if (!ex) return std::nullopt;
  auto c = [&](std::uint32_t k, std::uint32_t j, Element u, Element v) {
    auto h = [&](Element a, bool iv = false) { return hs.letter(GeneratorSymbol::h(k, j, a), iv); };
    return eg->element({h(u), h(v), h(G.multiply(v, u), true)});
  };
  CSymbolCheck r;
  r.hs_order = eg->order();
  r.exterior_order = ex->order;
  r.j_independent = true;
  for (std::uint32_t k = 1; k <= n && r.j_independent; ++k) {
    const std::uint32_t j0 = k == 1 ? 2 : 1;
    for (std::uint32_t j = 1; j <= n && r.j_independent; ++j) {
      if (j == k || j == j0) continue;
      for (Element u = 0; u < G.order() && r.j_independent; ++u)
        for (Element v = 0; v < G.order(); ++v)
          if (c(k, j, u, v) != c(k, j0, u, v)) {
            r.j_independent = false;
            r.witness = "c_" + std::to_string(k) + std::to_string(j) + "(" + G.name(u) + "," + G.name(v) +
                        ") != c_" + std::to_string(k) + std::to_string(j0);
            break;
          }
    }
  }
  std::vector<std::uint32_t> gens;
  for (std::uint32_t j = 2; j <= n; ++j)
    for (Element u = 0; u < G.order(); ++u)
      for (Element v = 0; v < G.order(); ++v) gens.push_back(c(1, j, u, v));
  r.subgroup_order = subgroup_of(*eg, gens).size();
  if (r.witness.empty() && r.subgroup_order != r.exterior_order)
    r.witness = "subgroup order " + std::to_string(r.subgroup_order) + " vs |G^G| " + std::to_string(r.exterior_order);
  return r;
}

SchurReport schur_report(std::uint32_t n, GroupPtr g, const std::string& name, SchurMethod method,
                         const EnumerationOptions& options) {
  SchurReport r;
  r.group = name;
  const bool all = method == SchurMethod::kAll;
  if (method == SchurMethod::kAbelian && !g->is_abelian())
    throw Error(ErrorKind::kMethodInapplicable, "the abelian formula needs an abelian group; " + name + " is not");
  if (all || method == SchurMethod::kKernel)
    if (auto k = kernel_of_mu(n, g, options)) r.via_kernel = k->invariants;
  if (all || method == SchurMethod::kExterior)
    if (auto ex = exterior_square_group(g, options)) r.via_exterior = ex->kernel;
  if ((all || method == SchurMethod::kAbelian) && g->is_abelian()) r.via_abelian_formula = schur_abelian(abelianization(*g));
  std::vector<const AbelianInvariants*> present;
  for (const auto* f : {&r.via_kernel, &r.via_exterior, &r.via_abelian_formula})
    if (*f) present.push_back(&**f);
  r.consistent = !present.empty();
  for (const auto* x : present) r.consistent = r.consistent && *x == *present.front();
  // A method that could not run leaves the report incomplete, not consistent.
  if (all && (!r.via_kernel || !r.via_exterior)) r.consistent = false;
  return r;
}

}  // namespace parasym
