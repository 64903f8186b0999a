#include <doctest.h>

#include "oracles.hpp"
#include "parasym/crossed_module.hpp"
#include "parasym/morphisms.hpp"
#include "parasym/rewriting.hpp"

using namespace parasym;

namespace {

GroupPtr builtin(const std::string& name) { return share(make_builtin(name)); }

using L = IndexedLetter<char>;

std::vector<Word> family_relators(const Presentation& alphabet, std::initializer_list<HnRelation> rels) {
  std::vector<Word> out;
  for (auto r : rels)
    for (auto& w : hn_relators(alphabet, r)) out.push_back(std::move(w));
  return out;
}

std::vector<Word> family_relators(const Presentation& alphabet, std::initializer_list<HsRelation> rels) {
  std::vector<Word> out;
  for (auto r : rels)
    for (auto& w : hs_relators(alphabet, r)) out.push_back(std::move(w));
  return out;
}

bool all_yes(const std::vector<Consequence>& v) {
  return std::all_of(v.begin(), v.end(), [](Consequence c) { return c == Consequence::kYes; });
}

}  // namespace

TEST_CASE("mu on generators") {
  const auto c2 = make_builtin("c2");
  const WreathProduct w2(c2, 3);
  CHECK(mu_of_generator(GeneratorSymbol::transposition(1, 2, 0), w2) ==
        WreathElement{identity_tuple(3), Permutation::transposition(3, 0, 1)});
  CHECK(mu_of_generator(GeneratorSymbol::transposition(1, 2, 1), w2) ==
        WreathElement{{1, 1, 0}, Permutation::transposition(3, 0, 1)});

  const auto c4 = make_builtin("c4");
  const WreathProduct w4(c4, 3);
  CHECK(mu_of_generator(GeneratorSymbol::h(1, 3, 1), w4) == WreathElement{{1, 0, 3}, Permutation::identity(3)});
  CHECK(mu_of_generator(GeneratorSymbol::reflection(2, 3), w4) ==
        WreathElement{identity_tuple(3), Permutation::transposition(3, 1, 2)});
  CHECK(mu_of_generator(GeneratorSymbol::coxeter(2, 1), w4) == mu_of_generator(GeneratorSymbol::transposition(2, 3, 1), w4));
  CHECK_THROWS_AS(mu_of_generator(GeneratorSymbol::wedge(0, 1), w4), Error);
}

TEST_CASE("mu is a homomorphism and the flipped convention is rejected") {
  const auto g = builtin("c2");
  const auto p = transposition_presentation(3, g);
  const WreathProduct w(*g, 3);
  CHECK(verify_homomorphism(p, w, mu_images(p, w)).ok);

  const WreathProduct flipped(*g, 3, TupleAction::kFlipped);
  const auto bad = verify_homomorphism(p, flipped, mu_images(p, flipped));
  CHECK_FALSE(bad.ok);
  CHECK(bad.failing_relator.has_value());

  const std::vector<WreathElement> trivial(p.generator_count(), w.identity());
  CHECK(verify_homomorphism(p, w, trivial).ok);
  CHECK(verify_homomorphism(p, *g, std::vector<Element>(p.generator_count(), 0)).ok);
}

TEST_CASE("mu is a homomorphism on every family for every builtin") {
  for (const std::string name : {"c2", "c3", "c4", "c6", "klein", "c4xc2", "c2cubed", "s3", "d4", "q8", "a4"}) {
    const auto g = builtin(name);
    for (std::uint32_t n : {3u, 4u}) {
      CAPTURE(name);
      CAPTURE(n);
      const WreathProduct w(*g, n);
      for (const auto& p : {transposition_presentation(n, g), coxeter_presentation(n, g), hs_presentation(n, g)})
        CHECK(verify_homomorphism(p, w, mu_images(p, w)).ok);
      if (n == 3) CHECK(verify_homomorphism(hn_presentation(n, g), w, mu_images(hn_presentation(n, g), w)).ok);
    }
  }
}

TEST_CASE("image of mu") {
  CHECK(image_subgroup_order(3, builtin("c2")) == 24);
  CHECK(image_subgroup_order(3, builtin("klein")) == 96);
  CHECK(image_subgroup_order(3, builtin("s3")) == 648);
  for (const std::string name : {"c2", "c3", "c4", "klein", "s3", "q8"}) {
    CAPTURE(name);
    const auto g = builtin(name);
    const auto image = image_subgroup_order(3, g);
    CHECK(image == oracle::mu_image_order(*g, 3));
    CHECK(image == oracle::d_n_order(*g, 3) * 6);
    CHECK(oracle::ipow(g->order(), 3) * 6 / image == abelianization(*g).order());
  }
}

TEST_CASE("kernel of mu") {
  const auto c2 = kernel_of_mu(3, builtin("c2"));
  REQUIRE(c2);
  CHECK(c2->elements.size() == 1);
  CHECK(c2->invariants.factors.empty());

  const auto klein = kernel_of_mu(3, builtin("klein"));
  REQUIRE(klein);
  CHECK(klein->elements.size() == 2);
  CHECK(klein->invariants.factors == std::vector<std::uint64_t>{2});
  CHECK(klein->central);

  const auto cubed = kernel_of_mu(3, builtin("c2cubed"));
  REQUIRE(cubed);
  CHECK(cubed->elements.size() == 8);
  CHECK(cubed->invariants.factors == std::vector<std::uint64_t>{2, 2, 2});
  CHECK(cubed->central);
  CHECK(cubed->group_order == cubed->elements.size() * cubed->image_order);

  CHECK_FALSE(kernel_of_mu(3, builtin("klein"), {.max_cosets = 50}).has_value());
}

TEST_CASE("kernel elements commute with every generator") {
  for (const std::string name : {"klein", "d4", "c4xc2"}) {
    CAPTURE(name);
    const auto p = transposition_presentation(3, builtin(name));
    const auto eg = enumerate_group(p);
    REQUIRE(eg);
    const auto k = kernel_of_mu(p, *eg);
    CHECK(k.central);
    for (auto x : k.elements) {
      CHECK(commutes_with_generators(*eg, x));
      for (std::uint32_t g = 0; g < eg->generator_count(); ++g)
        CHECK(eg->multiply(x, eg->generator(g)) == eg->multiply(eg->generator(g), x));
    }
  }
}

TEST_CASE("naturality of the kernel") {
  const auto trivial = kernel_naturality(3, builtin("c2"), builtin("c4"), {0, 2});
  REQUIRE(trivial);
  CHECK(trivial->ok());
  CHECK(trivial->source_kernel == 1);

  const auto cubed = kernel_naturality(3, builtin("klein"), builtin("c2cubed"), {0, 2, 4, 6});
  REQUIRE(cubed);
  CHECK(cubed->homomorphism);
  CHECK(cubed->into_kernel);
  CHECK(cubed->injective);
  CHECK(cubed->source_kernel == 2);
  CHECK(cubed->target_kernel == 8);

  CHECK_THROWS_AS(kernel_naturality(3, builtin("c2"), builtin("c4"), {0, 1}), Error);
}

TEST_CASE("crossed module axioms") {
  for (const std::string name : {"c2", "klein"}) {
    CAPTURE(name);
    const auto m = AmalgamModule::build(3, builtin(name));
    REQUIRE(m);
    CHECK(m->action_well_defined().passed());
    CHECK(m->cm1().passed());
    CHECK(m->cm2().passed());
    CHECK(m->peiffer_simple().passed());
    CHECK(m->kernel_central().passed());
  }
}

TEST_CASE("action on copy generators") {
  const auto g = make_builtin("c2");
  const WreathProduct w(g, 3);
  // ((12)_{(a,e,e)})^{(h, 1)} with h = (a,e,e) lands in the identity copy.
  const auto s = GeneratorSymbol::copy_transposition(1, 2, tuple_index(g, {1, 0, 0}));
  const WreathElement x{{1, 0, 0}, Permutation::identity(3)};
  CHECK(act_on_copy_generator(s, x, w) == GeneratorSymbol::copy_transposition(1, 2, 0));
  // (12)_e moved by (23) becomes (13)_e.
  const WreathElement t{identity_tuple(3), Permutation::transposition(3, 1, 2)};
  CHECK(act_on_copy_generator(GeneratorSymbol::copy_transposition(1, 2, 0), t, w) ==
        GeneratorSymbol::copy_transposition(1, 3, 0));
}

TEST_CASE("isomorphism certificates for the explicit maps") {
  const auto g = builtin("c2");
  {
    const auto cox = coxeter_presentation(3, g);
    const auto s1 = interpolating_presentation(3, 1, g);
    const auto cert = verify_isomorphism(coxeter_to_interpolating(cox, s1), interpolating_to_coxeter(s1, cox));
    CHECK(cert.valid());
    CHECK(cert.source_order == 24);
    CHECK(cert.target_order == 24);
  }
  for (std::uint32_t t = 1; t + 1 < 4; ++t) {
    CAPTURE(t);
    const auto st = interpolating_presentation(4, t, g);
    const auto st1 = interpolating_presentation(4, t + 1, g);
    CHECK(verify_isomorphism(interpolating_embedding(st, st1), interpolating_retraction(st1, st)).valid());
  }
  {
    const auto top = interpolating_presentation(3, 2, g);
    const auto tr = transposition_presentation(3, g);
    const auto am = amalgam_presentation(3, g);
    CHECK(verify_isomorphism(interpolating_to_transposition(top, tr), transposition_to_interpolating(tr, top)).valid());
    CHECK(verify_isomorphism(transposition_to_amalgam(tr, am), amalgam_to_transposition(am, tr)).valid());
  }
  {
    // H_3(C2) (order 8) and HS_3(C2) (order 4) on the same alphabet.
    const auto hn = hn_presentation(3, g);
    const auto hs = hs_presentation(3, g);
    const auto cert = verify_isomorphism(same_alphabet_map(hn, hs), same_alphabet_map(hs, hn));
    CHECK_FALSE(cert.valid());
    CHECK(cert.status == CertificateStatus::kInvalid);
    CHECK_FALSE(cert.failure.empty());
  }
  {
    const auto cox = coxeter_presentation(3, g);
    const auto s1 = interpolating_presentation(3, 1, g);
    const auto cert = verify_isomorphism(coxeter_to_interpolating(cox, s1), interpolating_to_coxeter(s1, cox),
                                         {.max_cosets = 10});
    CHECK(cert.status == CertificateStatus::kInconclusive);
  }
}

TEST_CASE("relations R and H imply each other") {
  for (const std::string name : {"c2", "klein", "c4"}) {
    CAPTURE(name);
    const auto hs = hs_presentation(3, builtin(name));
    const auto targets = family_relators(hs, {HnRelation::kH1, HnRelation::kH2, HnRelation::kH3, HnRelation::kH4,
                                               HnRelation::kH5});
    CHECK(all_yes(verify_implication(hs, targets)));
  }
  {
    const auto g = builtin("klein");
    const auto r03 = hs_presentation(4, g, {HsRelation::kR0, HsRelation::kR1, HsRelation::kR2, HsRelation::kR3});
    const auto hn = hn_presentation(4, g);
    CHECK(all_yes(verify_implication(
        r03, family_relators(r03, {HnRelation::kH1, HnRelation::kH2, HnRelation::kH3, HnRelation::kH4,
                                   HnRelation::kH5}))));
    CHECK(all_yes(verify_implication(
        hn, family_relators(hn, {HsRelation::kR0, HsRelation::kR1, HsRelation::kR2, HsRelation::kR3}))));
  }
  {
    // For n = 3 and G = C4, H1-H5 do not force R4.
    const auto hn = hn_presentation(3, builtin("c4"));
    const auto verdicts = verify_implication(hn, hs_relators(hn, HsRelation::kR4));
    CHECK(std::count(verdicts.begin(), verdicts.end(), Consequence::kNo) > 0);
    CHECK(std::count(verdicts.begin(), verdicts.end(), Consequence::kTimeout) == 0);
  }
}

TEST_CASE("tau on letters") {
  CHECK(rewrite_tau<char>({}, 3).empty());
  CHECK(rewrite_tau<char>({{1, 2, 'a'}, {1, 2, 'e'}}, 3) == std::vector<L>{{1, 2, 'a'}, {2, 1, 'e'}});
  CHECK(rewrite_tau<char>({{1, 2, 'a'}, {2, 3, 'b'}, {1, 3, 'c'}}, 3) ==
        std::vector<L>{{1, 2, 'a'}, {1, 3, 'b'}, {2, 1, 'c'}});

  const std::vector<L> u{{1, 2, 'a'}, {1, 2, 'e'}};
  std::vector<L> uu = u;
  uu.insert(uu.end(), u.begin(), u.end());
  auto tu = rewrite_tau(u, 3);
  auto tuu = rewrite_tau(uu, 3);
  tu.insert(tu.end(), tu.begin(), tu.end());
  CHECK(tuu == tu);

  TauState s(3);
  CHECK(s.trivial());
  s.next(1, 2, false);
  CHECK_FALSE(s.trivial());
  s.next(2, 1, false);
  CHECK(s.trivial());
}

TEST_CASE("tau on words evaluates correctly") {
  const auto g = builtin("c2");
  const auto p = transposition_presentation(3, g);
  const auto hs = hs_presentation(3, g);
  const auto eg = enumerate_group(p);
  REQUIRE(eg);
  const auto t = [&](std::uint32_t i, std::uint32_t j, Element a) { return p.letter(GeneratorSymbol::transposition(i, j, a)); };

  // ((12)_a (23)_b)^3 has trivial underlying permutation.
  Word w;
  for (int k = 0; k < 3; ++k) w.insert(w.end(), {t(1, 2, 1), t(2, 3, 0)});
  const auto tw = rewrite_tau(p, hs, w);
  CHECK(tw.size() == 6);
  CHECK(eg->element(embed_h_word(hs, p, tw)) == eg->element(w));

  // An instance of (ij)_a^2 = 1 rewrites to an element that is trivial.
  const Word sq{t(1, 3, 1), t(1, 3, 1)};
  CHECK(eg->element(embed_h_word(hs, p, rewrite_tau(p, hs, sq))) == 0);
  CHECK(is_consequence(hs, rewrite_tau(p, hs, sq)).verdict == Consequence::kYes);

  // h_ij(a) = (ij)_a (ij)_e.
  for (std::uint32_t i = 1; i <= 3; ++i)
    for (std::uint32_t j = 1; j <= 3; ++j)
      if (i != j)
        for (Element a = 0; a < 2; ++a)
          CHECK(eg->element(embed_h_word(hs, p, {hs.letter(GeneratorSymbol::h(i, j, a))})) ==
                eg->element({t(i, j, a), t(i, j, 0)}));
}

TEST_CASE("tau properties on random samples") {
  for (const std::string name : {"c2", "klein"}) {
    CAPTURE(name);
    const auto r = verify_tau_properties(3, builtin(name), 200);
    CHECK(r.samples == 200);
    CHECK(r.multiplicative.passed());
    CHECK(r.evaluation.passed());
    CHECK(r.free_reduction.passed());
    CHECK(r.base_case.passed());
  }
}

TEST_CASE("split decomposition") {
  const auto c2 = verify_split_decomposition(3, builtin("c2"));
  REQUIRE(c2);
  CHECK(c2->ok());
  CHECK(c2->group_order == 24);
  CHECK(c2->hs_order == 4);

  const auto klein = verify_split_decomposition(3, builtin("klein"));
  REQUIRE(klein);
  CHECK(klein->ok());
  CHECK(klein->hs_order == 32);
  CHECK(klein->hs_standalone_order == 32);

  const auto trivial = verify_split_decomposition(3, builtin("c1"));
  REQUIRE(trivial);
  CHECK(trivial->ok());
  CHECK(trivial->group_order == 6);
  CHECK(trivial->hs_order == 1);
}
