#include <doctest.h>

#include "oracles.hpp"
#include "parasym/error.hpp"
#include "parasym/homology.hpp"
#include "parasym/morphisms.hpp"

using namespace parasym;

namespace {

GroupPtr builtin(const std::string& name) { return share(make_builtin(name)); }

const std::vector<std::string> kAbelian{"c2", "c3", "c4", "c6", "klein", "c4xc2", "c2cubed"};
const std::vector<std::string> kAll{"c2", "c3", "c4", "c6", "klein", "c4xc2", "c2cubed", "s3", "d4", "q8", "a4"};

AbelianInvariants chain(std::vector<std::uint64_t> f) { return AbelianInvariants{std::move(f)}; }

}  // namespace

TEST_CASE("schur multiplier of abelian groups") {
  CHECK(schur_abelian(chain({2})).factors.empty());
  CHECK(schur_abelian(chain({2, 2})).factors == std::vector<std::uint64_t>{2});
  CHECK(schur_abelian(chain({2, 2, 2})).factors == std::vector<std::uint64_t>{2, 2, 2});
  CHECK(schur_abelian(chain({2, 4})).factors == std::vector<std::uint64_t>{2});
  CHECK(schur_abelian(chain({})).factors.empty());
  CHECK_THROWS_AS(schur_abelian(chain({4, 2})), Error);
  CHECK_THROWS_AS(schur_abelian(chain({1, 2})), Error);
  for (const auto& name : kAbelian)
    CHECK(schur_abelian(chain(oracle::abelian_factors(name))).order() ==
          oracle::schur_order_abelian(oracle::abelian_factors(name)));
}

TEST_CASE("exterior square examples") {
  const auto klein = exterior_square_group(builtin("klein"));
  REQUIRE(klein);
  CHECK(klein->order == 2);
  CHECK(klein->kernel.factors == std::vector<std::uint64_t>{2});

  const auto d4 = exterior_square_group(builtin("d4"));
  REQUIRE(d4);
  CHECK(d4->order == 4);
  CHECK(d4->kernel.factors == std::vector<std::uint64_t>{2});

  const auto q8 = exterior_square_group(builtin("q8"));
  REQUIRE(q8);
  CHECK(q8->order == 2);
  CHECK(q8->kernel.factors.empty());
}

TEST_CASE("exterior square order identity and agreement with known multipliers") {
  for (const auto& name : kAll) {
    CAPTURE(name);
    const auto g = builtin(name);
    const auto e = exterior_square_group(g);
    REQUIRE(e);
    CHECK(e->commutator_image_order == oracle::derived_subgroup(*g).size());
    CHECK(e->order == e->commutator_image_order * e->kernel.order());
    CHECK(e->kernel.order() == oracle::schur_order(name));
  }
}

TEST_CASE("kernel of mu has the order of the exterior kernel") {
  for (const auto& name : kAll) {
    CAPTURE(name);
    const auto g = builtin(name);
    const auto k = kernel_of_mu(3, g);
    const auto e = exterior_square_group(g);
    REQUIRE(k);
    REQUIRE(e);
    CHECK(k->invariants == e->kernel);
    CHECK(k->invariants.order() == oracle::schur_order(name));
  }
}

TEST_CASE("c-symbols") {
  for (const auto& [name, order] : std::vector<std::pair<std::string, std::uint64_t>>{{"klein", 2}, {"c2", 1}, {"d4", 4}}) {
    CAPTURE(name);
    const auto c = c_symbol_subgroup_check(3, builtin(name));
    REQUIRE(c);
    CHECK(c->subgroup_order == order);
    CHECK(c->exterior_order == order);
    CHECK(c->j_independent);
    CHECK(c->ok());
  }
}

TEST_CASE("schur reports") {
  const auto klein = schur_report(3, builtin("klein"), "klein");
  CHECK(klein.consistent);
  REQUIRE(klein.via_kernel);
  REQUIRE(klein.via_exterior);
  REQUIRE(klein.via_abelian_formula);
  CHECK(klein.via_kernel->factors == std::vector<std::uint64_t>{2});
  CHECK(*klein.via_exterior == *klein.via_kernel);
  CHECK(*klein.via_abelian_formula == *klein.via_kernel);

  const auto s3 = schur_report(3, builtin("s3"), "s3");
  CHECK(s3.consistent);
  CHECK_FALSE(s3.via_abelian_formula);
  REQUIRE(s3.via_kernel);
  CHECK(s3.via_kernel->factors.empty());

  const auto a4 = schur_report(3, builtin("a4"), "a4");
  CHECK(a4.consistent);
  REQUIRE(a4.via_kernel);
  REQUIRE(a4.via_exterior);
  CHECK(a4.via_kernel->factors == std::vector<std::uint64_t>{2});
  CHECK(a4.via_exterior->factors == std::vector<std::uint64_t>{2});

  try {
    schur_report(3, builtin("s3"), "s3", SchurMethod::kAbelian);
    FAIL("expected method-inapplicable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kMethodInapplicable);
  }

  const auto q8 = schur_report(3, builtin("q8"), "q8", SchurMethod::kExterior);
  REQUIRE(q8.via_exterior);
  CHECK(q8.via_exterior->factors.empty());
  CHECK_FALSE(q8.via_kernel);

  for (const auto& name : kAbelian) {
    CAPTURE(name);
    const auto r = schur_report(3, builtin(name), name);
    CHECK(r.consistent);
    REQUIRE(r.via_abelian_formula);
    CHECK(r.via_abelian_formula->order() == oracle::schur_order(name));
  }
}
