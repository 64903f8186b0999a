#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "parasym/abelian.hpp"
#include "parasym/closure.hpp"
#include "parasym/error.hpp"
#include "parasym/finite_group.hpp"
#include "parasym/wreath.hpp"

using namespace parasym;

namespace {

const std::vector<std::string> kBuiltins{"c2", "c3", "c4", "c6", "klein", "c4xc2", "c2cubed", "s3", "d4", "q8", "a4"};

template <typename F>
ErrorKind error_kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::kParseError;
}

struct TupleHash {
  std::size_t operator()(const Tuple& t) const noexcept {
    std::size_t h = 0;
    for (Element x : t) h = h * 131 + x;
    return h;
  }
};

WreathElement random_element(const WreathProduct& w, std::mt19937_64& rng) {
  const auto& g = w.base();
  Tuple v(w.degree());
  for (auto& x : v) x = static_cast<Element>(rng() % g.order());
  std::vector<std::uint32_t> perm(w.degree());
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  return {v, Permutation(perm)};
}

}  // namespace

TEST_CASE("builtin groups") {
  const auto c2 = make_builtin("c2");
  CHECK(c2.order() == 2);
  CHECK(c2.multiply(1, 1) == 0);

  const auto klein = make_builtin("klein");
  CHECK(klein.order() == 4);
  for (Element x = 1; x < 4; ++x) CHECK(klein.element_order(x) == 2);

  const auto s3 = make_builtin("s3");
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(oracle::derived_subgroup(s3).size() == 3);
  CHECK(s3.derived_subgroup().size() == 3);

  CHECK(make_builtin("q8").order() == 8);
  CHECK(make_builtin("a4").order() == 12);
  CHECK(error_kind_of([] { make_builtin("s7"); }) == ErrorKind::kUnknownName);
}

TEST_CASE("every builtin is a group and its derived subgroup matches brute force") {
  for (const auto& name : kBuiltins) {
    CAPTURE(name);
    const auto g = make_builtin(name);
    // Reparsing runs the Latin-square and associativity checks again.
    CHECK(parse_multiplication_table(format_multiplication_table(g)) == g);
    const auto derived = oracle::derived_subgroup(g);
    CHECK(std::vector<Element>(derived.begin(), derived.end()) == g.derived_subgroup());
    const auto ab = abelianization(g);
    CHECK(g.order() % ab.order() == 0);
    CHECK(ab.order() == g.order() / derived.size());
  }
}

TEST_CASE("multiplication table parsing") {
  const auto c2 = parse_multiplication_table("2\n0 1\n1 0\n");
  CHECK(c2 == make_builtin("c2"));
  CHECK(error_kind_of([] { parse_multiplication_table("2\n0 1\n1 1\n"); }) == ErrorKind::kNotAGroup);
  CHECK(error_kind_of([] { parse_multiplication_table("2\n1 0\n0 1\n"); }) == ErrorKind::kIdentityNotZero);
  CHECK(error_kind_of([] { parse_multiplication_table("2\n0 x\n1 0\n"); }) == ErrorKind::kParseError);
  CHECK(error_kind_of([] { parse_multiplication_table(""); }) == ErrorKind::kParseError);
  // A Latin square that is not associative (a loop of order 5).
  CHECK(error_kind_of([] {
          parse_multiplication_table("5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n");
        }) == ErrorKind::kNotAGroup);

  const auto s3 = parse_multiplication_table(format_multiplication_table(make_builtin("s3")));
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());

  const auto named = parse_multiplication_table("2\n0 1\n1 0\nnames: 1 t\n");
  CHECK(named.lookup("t") == Element{1});
  CHECK(named.name(1) == "t");
}

TEST_CASE("wreath product basics") {
  const auto c2 = make_builtin("c2");
  const WreathProduct w(c2, 3);
  CHECK(w.order() == 48);
  const WreathElement x{{1, 0, 1}, Permutation({1, 2, 0})};
  CHECK(w.multiply(x, w.identity()) == x);
  CHECK(w.multiply(w.identity(), x) == x);

  const auto klein = make_builtin("klein");
  const WreathProduct wk(klein, 2);
  const WreathElement a{{1, 0}, Permutation::identity(2)};
  const WreathElement b{{0, 2}, Permutation::identity(2)};
  CHECK(wk.multiply(a, b) == WreathElement{{1, 2}, Permutation::identity(2)});

  // μ((12)_a) squared in C2 wr S3.
  const WreathElement mu{d_vector(c2, 3, 1, 2, 1), Permutation::transposition(3, 0, 1)};
  CHECK(mu.vector == Tuple{1, 1, 0});
  CHECK(w.is_identity(w.multiply(mu, mu)));

  const WreathElement wrong{{1, 0}, Permutation::identity(2)};
  CHECK(error_kind_of([&] { w.multiply(x, wrong); }) == ErrorKind::kDegreeMismatch);
}

TEST_CASE("d_vector") {
  const auto c2 = make_builtin("c2");
  const auto c4 = make_builtin("c4");
  CHECK(d_vector(c2, 3, 1, 2, 1) == Tuple{1, 1, 0});
  CHECK(d_vector(c2, 3, 1, 2, 0) == identity_tuple(3));
  CHECK(d_vector(c4, 3, 2, 3, 1) == Tuple{0, 1, 3});
  CHECK(error_kind_of([&] { d_vector(c2, 3, 2, 2, 1); }) == ErrorKind::kIndexOutOfRange);
  CHECK(error_kind_of([&] { d_vector(c2, 3, 1, 4, 1); }) == ErrorKind::kIndexOutOfRange);
}

TEST_CASE("subgroup closure") {
  const auto klein = make_builtin("klein");
  const auto mul = [&](const Tuple& a, const Tuple& b) { return tuple_multiply(klein, a, b); };
  CHECK(subgroup_closure<Tuple>({}, identity_tuple(3), mul, TupleHash{}).size() == 1);

  std::vector<Tuple> ds;
  for (std::uint32_t i = 1; i <= 3; ++i)
    for (std::uint32_t j = 1; j <= 3; ++j)
      if (i != j)
        for (Element a = 0; a < klein.order(); ++a) ds.push_back(d_vector(klein, 3, i, j, a));
  CHECK(subgroup_closure(ds, identity_tuple(3), mul, TupleHash{}).size() == 16);

  const auto c2 = make_builtin("c2");
  const WreathProduct w(c2, 3);
  std::vector<WreathElement> mus;
  for (std::uint32_t i = 1; i <= 3; ++i)
    for (std::uint32_t j = i + 1; j <= 3; ++j)
      for (Element a = 0; a < 2; ++a) mus.push_back({d_vector(c2, 3, i, j, a), Permutation::transposition(3, i - 1, j - 1)});
  const auto image = subgroup_closure(mus, w.identity(), [&](const auto& x, const auto& y) { return w.multiply(x, y); });
  CHECK(image.size() == 24);
  CHECK(oracle::mu_image_order(c2, 3) == 24);
}

TEST_CASE("abelianization and abelian invariants") {
  CHECK(abelianization(make_builtin("s3")).factors == std::vector<std::uint64_t>{2});
  CHECK(abelianization(make_builtin("c4xc2")).factors == std::vector<std::uint64_t>{2, 4});
  CHECK(abelianization(make_builtin("q8")).factors == std::vector<std::uint64_t>{2, 2});
  CHECK(abelianization(make_builtin("a4")).factors == std::vector<std::uint64_t>{3});
  for (const std::string name : {"c2", "c3", "c4", "c6", "klein", "c4xc2", "c2cubed"})
    CHECK(abelianization(make_builtin(name)).factors == oracle::abelian_factors(name));

  const auto c4 = make_builtin("c4");
  CHECK(abelian_invariants_of_subgroup(c4, {0}).factors.empty());
  CHECK(abelian_invariants_of_subgroup(c4, {0, 1, 2, 3}).factors == std::vector<std::uint64_t>{4});
  CHECK(error_kind_of([&] { abelian_invariants_of_subgroup(c4, {0, 1}); }) == ErrorKind::kNotClosed);
  const auto s3 = make_builtin("s3");
  std::vector<Element> all(6);
  std::iota(all.begin(), all.end(), 0u);
  CHECK(error_kind_of([&] { abelian_invariants_of_subgroup(s3, all); }) == ErrorKind::kNotAbelian);

  CHECK(AbelianInvariants::from_cyclic_orders({2, 3}).factors == std::vector<std::uint64_t>{6});
  CHECK(AbelianInvariants::from_cyclic_orders({4, 6, 1}).factors == std::vector<std::uint64_t>{2, 12});
  CHECK(AbelianInvariants::from_cyclic_orders({0, 2}).factors == std::vector<std::uint64_t>{2, 0});
  CHECK(AbelianInvariants::from_cyclic_orders({0, 2}).to_string() == "[2,0]");
  CHECK_FALSE(AbelianInvariants::from_cyclic_orders({0, 2}).is_finite());
}

TEST_CASE("wreath law is associative with inverses on random triples") {
  std::mt19937_64 rng(20261016);
  for (const std::string name : {"c2", "klein", "s3", "q8"}) {
    const auto g = make_builtin(name);
    for (std::uint32_t n : {3u, 4u}) {
      const WreathProduct w(g, n);
      for (int k = 0; k < 100; ++k) {
        const auto x = random_element(w, rng), y = random_element(w, rng), z = random_element(w, rng);
        REQUIRE(w.multiply(w.multiply(x, y), z) == w.multiply(x, w.multiply(y, z)));
        REQUIRE(w.is_identity(w.multiply(x, w.inverse(x))));
        REQUIRE(w.is_identity(w.multiply(w.inverse(x), x)));
      }
    }
  }
}

TEST_CASE("the flipped tuple action is not an action") {
  const auto c2 = make_builtin("c2");
  const WreathProduct w(c2, 3, TupleAction::kFlipped);
  bool associative = true;
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200 && associative; ++k) {
    const auto x = random_element(w, rng), y = random_element(w, rng), z = random_element(w, rng);
    associative = w.multiply(w.multiply(x, y), z) == w.multiply(x, w.multiply(y, z));
  }
  CHECK_FALSE(associative);
}

TEST_CASE("s^g = s^h iff s fixes h g^-1") {
  for (const std::string name : {"c2", "c3", "s3"}) {
    const auto g = make_builtin(name);
    const std::uint32_t n = 3;
    const WreathProduct w(g, n);
    const std::uint64_t tuples = oracle::ipow(g.order(), n);
    for (const auto& s : Permutation::all(n))
      for (std::uint64_t gi = 0; gi < tuples; ++gi)
        for (std::uint64_t hi = 0; hi < tuples; ++hi) {
          const auto gv = tuple_from_index(g, n, gi), hv = tuple_from_index(g, n, hi);
          const auto hg = tuple_multiply(g, hv, tuple_inverse(g, gv));
          REQUIRE((w.twisted(s, gv) == w.twisted(s, hv)) == (w.act(hg, s) == hg));
        }
  }
}

TEST_CASE("|D_n(G)| * |G^ab| = |G|^n") {
  for (const auto& name : kBuiltins) {
    const auto g = make_builtin(name);
    for (std::uint32_t n : {3u, 4u}) {
      CAPTURE(name);
      CAPTURE(n);
      std::vector<Tuple> ds;
      for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = 1; j <= n; ++j)
          if (i != j)
            for (Element a = 0; a < g.order(); ++a) ds.push_back(d_vector(g, n, i, j, a));
      const auto closure = subgroup_closure(
          ds, identity_tuple(n), [&](const Tuple& a, const Tuple& b) { return tuple_multiply(g, a, b); }, TupleHash{});
      CHECK(closure.size() == oracle::d_n_order(g, n));
      CHECK(closure.size() * abelianization(g).order() == oracle::ipow(g.order(), n));
    }
  }
}

TEST_CASE("direct products and permutation groups") {
  const auto p = direct_product(make_builtin("c2"), make_builtin("c3"));
  CHECK(p.order() == 6);
  CHECK(abelianization(p).factors == std::vector<std::uint64_t>{6});
  CHECK(group_from_permutations({{1, 2, 3, 4, 0}}).order() == 5);

  const Permutation a({1, 0, 2}), b({0, 2, 1});
  // Left factor first: (a * b)(0) = b(a(0)) = b(1) = 2.
  CHECK((a * b)(0) == 2);
  CHECK((a * a).is_identity());
  CHECK(Permutation::all(4).size() == 24);
  for (const auto& s : Permutation::all(4)) {
    Permutation prod = Permutation::identity(4);
    for (auto [i, j] : s.transposition_factorization()) prod = prod * Permutation::transposition(4, i, j);
    CHECK(prod == s);
  }
}
