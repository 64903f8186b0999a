#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "parasym/closure.hpp"
#include "parasym/coset_enumeration.hpp"
#include "parasym/error.hpp"
#include "parasym/families.hpp"

using namespace parasym;

namespace {

GroupPtr builtin(const std::string& name) { return share(make_builtin(name)); }

std::uint64_t rep_group_order(const PermutationRep& rep) {
  return subgroup_closure(rep.images, Permutation::identity(rep.degree),
                          [](const Permutation& a, const Permutation& b) { return a * b; })
      .size();
}

// All relators scan back to their starting coset.
bool table_is_closed_and_consistent(const CosetTable& t, const Presentation& p) {
  for (std::uint32_t c = 0; c < t.coset_count(); ++c) {
    for (std::uint32_t g = 0; g < t.generator_count(); ++g)
      for (bool i : {false, true})
        if (t.image(c, {g, i}) == CosetTable::kUndefined) return false;
    for (const auto& r : p.relators())
      if (t.trace(c, r) != c) return false;
  }
  return true;
}

Presentation free_group(std::uint32_t rank) {
  std::vector<GeneratorSymbol> gens;
  for (std::uint32_t k = 0; k < rank; ++k) gens.push_back(GeneratorSymbol::named("x" + std::to_string(k)));
  return Presentation({"free", 0, 0}, builtin("c1"), gens, {});
}

}  // namespace

TEST_CASE("todd_coxeter examples") {
  const auto s4 = reflection_presentation_sn(4);
  const auto t = todd_coxeter(s4);
  CHECK(t.complete());
  CHECK(t.coset_count() == 24);
  CHECK(table_is_closed_and_consistent(t, s4));

  const auto k = transposition_presentation(3, builtin("klein"));
  CHECK(todd_coxeter(k).coset_count() == 192);

  // Index of the section image {(ij)_e} is |HS_3(C2)| = 4.
  const auto p = transposition_presentation(3, builtin("c2"));
  std::vector<Word> section;
  for (std::uint32_t i = 1; i <= 3; ++i)
    for (std::uint32_t j = 1; j <= 3; ++j)
      if (i != j) section.push_back({p.letter(GeneratorSymbol::transposition(i, j, 0))});
  const auto coset = todd_coxeter(p, section);
  CHECK(coset.complete());
  CHECK(coset.coset_count() == 4);
  CHECK(table_is_closed_and_consistent(coset, p));
}

TEST_CASE("permutation representations") {
  const auto s3 = reflection_presentation_sn(3);
  const auto rep = permutation_rep(todd_coxeter(s3), s3);
  CHECK(rep.degree == 6);
  CHECK(rep_group_order(rep) == 6);

  const auto p = transposition_presentation(3, builtin("c2"));
  const auto rep24 = permutation_rep(todd_coxeter(p), p);
  CHECK(rep24.degree == 24);
  CHECK(rep_group_order(rep24) == 24);
  for (const auto& r : p.relators()) CHECK(evaluate_word(rep24, r).is_identity());

  CosetTable partial = todd_coxeter(free_group(1), {}, {.max_cosets = 16});
  CHECK_FALSE(partial.complete());
  CHECK_THROWS_AS(permutation_rep(partial, free_group(1)), Error);
}

TEST_CASE("evaluate_word") {
  const auto p = transposition_presentation(3, builtin("klein"));
  const auto rep = permutation_rep(todd_coxeter(p), p);
  CHECK(evaluate_word(rep, {}).is_identity());
  std::mt19937 rng(3);
  for (int k = 0; k < 50; ++k) {
    Word w;
    for (int l = 0; l < 12; ++l) w.push_back({static_cast<std::uint32_t>(rng() % p.generator_count()), rng() % 2 == 0});
    CHECK(evaluate_word(rep, concat(w, inverse_word(w))).is_identity());
    CHECK(evaluate_word(rep, w) == evaluate_word(rep, free_reduce(w)));
  }
  CHECK_THROWS_AS(evaluate_word(rep, {gen(static_cast<std::uint32_t>(p.generator_count()))}), Error);
}

TEST_CASE("is_consequence") {
  const auto p = transposition_presentation(3, builtin("c2"));
  for (const auto& r : p.relators()) CHECK(is_consequence(p, r).verdict == Consequence::kYes);
  const auto no = is_consequence(p, {gen(0)});
  CHECK(no.verdict == Consequence::kNo);
  CHECK(no.witness.has_value());
  CHECK(*no.witness != 0);

  // Free group of rank 2: the enumeration cannot finish, but g survives in
  // the elementary abelian quotient.
  const auto f = free_group(2);
  const auto r = is_consequence(f, {gen(0)}, {.max_cosets = 1000});
  CHECK(r.verdict == Consequence::kNo);
  CHECK(is_consequence(f, commutator_word({gen(0)}, {gen(1)}), {.max_cosets = 1000}).verdict == Consequence::kTimeout);
  CHECK(std::string(to_string(Consequence::kTimeout)) == "timeout");
}

TEST_CASE("a commutator in H_3(C2) without H3 (recorded, not asserted)") {
  const auto g = builtin("c2");
  const auto p = hn_presentation(3, g, {HnRelation::kH1, HnRelation::kH2, HnRelation::kH4, HnRelation::kH5});
  const auto h = [&](std::uint32_t i, std::uint32_t j, Element a) { return p.letter(GeneratorSymbol::h(i, j, a)); };
  // c_12(a, a) = h_12(a) h_12(a) h_12(a a)^-1
  const Word c{h(1, 2, 1), h(1, 2, 1), h(1, 2, 0).inverted()};
  const auto r = is_consequence(p, commutator_word(c, {h(1, 3, 1)}), {.max_cosets = 100000});
  MESSAGE("[c_12(a,a), h_13(a)] in H_3(C2) without H3: " << std::string(to_string(r.verdict)));
  CHECK(r.verdict != Consequence::kNo);
}

TEST_CASE("completed enumerations do not depend on the cap and are deterministic") {
  const auto p = transposition_presentation(3, builtin("klein"));
  const auto big = todd_coxeter(p);
  const auto tight = todd_coxeter(p, {}, {.max_cosets = 400});
  REQUIRE(tight.complete());
  CHECK(tight.coset_count() == big.coset_count());
  CHECK(tight.rows() == big.rows());
  CHECK(todd_coxeter(p).rows() == big.rows());
  CHECK(todd_coxeter(p).dump() == big.dump());
  CHECK(big.dump().find('-') == std::string::npos);

  const auto too_small = todd_coxeter(p, {}, {.max_cosets = 100});
  CHECK_FALSE(too_small.complete());

  // The memory ceiling also bounds the capacity.
  const auto starved = todd_coxeter(p, {}, {.max_cosets = 1'000'000, .memory_limit_bytes = 4096});
  CHECK_FALSE(starved.complete());
}

TEST_CASE("regular representations of the order-table cases") {
  const std::vector<std::pair<std::string, std::uint32_t>> cases{
      {"c2", 3}, {"c2", 4}, {"c3", 3}, {"c4", 3}, {"klein", 3}, {"klein", 4},
      {"c4xc2", 3}, {"c2cubed", 3}, {"s3", 3}, {"d4", 3}, {"q8", 3}, {"a4", 3}};
  for (const auto& [name, n] : cases) {
    CAPTURE(name);
    CAPTURE(n);
    const auto p = transposition_presentation(n, builtin(name));
    const auto t = todd_coxeter(p);
    REQUIRE(t.complete());
    const auto rep = permutation_rep(t, p);
    for (const auto& r : p.relators()) REQUIRE(evaluate_word(rep, r).is_identity());
    if (t.coset_count() <= 3072) CHECK(rep_group_order(rep) == t.coset_count());
  }
}

TEST_CASE("index multiplicativity for the section image") {
  for (const std::string name : {"c2", "c3", "klein", "s3"}) {
    CAPTURE(name);
    const auto p = transposition_presentation(3, builtin(name));
    std::vector<Word> section;
    for (std::uint32_t i = 1; i <= 3; ++i)
      for (std::uint32_t j = 1; j <= 3; ++j)
        if (i != j) section.push_back({p.letter(GeneratorSymbol::transposition(i, j, 0))});
    const auto index = todd_coxeter(p, section);
    REQUIRE(index.complete());
    // The section image is a copy of S_3, whose own regular enumeration has 6 cosets.
    const auto s3 = todd_coxeter(reflection_presentation_sn(3));
    CHECK(todd_coxeter(p).coset_count() == index.coset_count() * s3.coset_count());
  }
}

TEST_CASE("enumerated group arithmetic") {
  const auto p = transposition_presentation(3, builtin("s3"));
  const auto eg = enumerate_group(p);
  REQUIRE(eg.has_value());
  CHECK(eg->order() == 648);
  std::mt19937 rng(11);
  for (int k = 0; k < 200; ++k) {
    const std::uint32_t x = rng() % eg->order(), y = rng() % eg->order(), z = rng() % eg->order();
    CHECK(eg->multiply(eg->multiply(x, y), z) == eg->multiply(x, eg->multiply(y, z)));
    CHECK(eg->multiply(x, eg->inverse(x)) == 0);
    CHECK(eg->element(eg->word_of(x)) == x);
    CHECK(eg->order() % eg->element_order(x) == 0);
  }
}
