#include <doctest.h>

#include <cstdlib>
#include <regex>

#include "parasym/error.hpp"
#include "parasym/report.hpp"
#include "parasym/suites.hpp"

using namespace parasym;

TEST_CASE("record lines") {
  const auto r = make_record("theorem1.order", {{"group", "c2"}, {"n", "3"}}, CheckResult::pass(), 12);
  CHECK(r.to_line() == "check=theorem1.order\tparams=group=c2,n=3\tverdict=pass\twitness=-\tms=12");

  const auto f = make_record("x.y", {}, CheckResult::fail("relator 3"), 0);
  CHECK(f.to_line() == "check=x.y\tparams=\tverdict=fail\twitness=relator 3\tms=0");

  // A failure always carries a witness.
  const auto bare = make_record("x.z", {}, CheckResult{Verdict::kFail, ""}, 0);
  REQUIRE(bare.witness.has_value());
  CHECK_FALSE(bare.witness->empty());

  CHECK(std::string(to_string(Verdict::kInconclusive)) == "inconclusive");
  CHECK(std::string(to_string(Verdict::kTimeout)) == "timeout");
}

TEST_CASE("group specs") {
  CHECK(parse_group_spec("builtin:klein")->order() == 4);
  CHECK(parse_group_spec("prod:c2xc3")->order() == 6);
  CHECK(parse_group_spec("prod:builtin:c4xc2xbuiltin:c3")->order() == 24);
  CHECK_THROWS_AS(parse_group_spec("builtin:nope"), Error);
  CHECK_THROWS_AS(parse_group_spec("klein"), Error);
  CHECK_THROWS_AS(parse_group_spec("file:/nonexistent/table.txt"), Error);
}

TEST_CASE("suite names and exit codes") {
  for (const std::string s : {"theorem1", "crossed-module", "equivalences", "rewriting", "h-implications", "schur"}) {
    const auto suite = parse_suite(s);
    REQUIRE(suite);
    CHECK(to_string(*suite) == s);
  }
  CHECK_FALSE(parse_suite("nope"));

  auto rec = [](Verdict v) { return make_record("c", {}, CheckResult{v, "w"}, 0); };
  CHECK(suite_exit_code({rec(Verdict::kPass)}) == 0);
  CHECK(suite_exit_code({rec(Verdict::kPass), rec(Verdict::kTimeout)}) == 3);
  CHECK(suite_exit_code({rec(Verdict::kInconclusive)}) == 3);
  CHECK(suite_exit_code({rec(Verdict::kTimeout), rec(Verdict::kFail)}) == 4);
}

TEST_CASE("suites produce sorted, well-formed records") {
  const std::regex line(R"(check=[A-Za-z0-9.\-]+\tparams=[^\t]*\tverdict=(pass|fail|timeout|inconclusive)\twitness=[^\t]+\tms=[0-9]+)");
  const auto g = parse_group_spec("builtin:c2");
  for (auto suite : {Suite::kTheorem1, Suite::kCrossedModule, Suite::kEquivalences, Suite::kRewriting,
                     Suite::kHImplications, Suite::kSchur}) {
    CAPTURE(to_string(suite));
    const auto records = run_suite(suite, g, "c2", 3, {});
    REQUIRE_FALSE(records.empty());
    CHECK(std::is_sorted(records.begin(), records.end(),
                         [](const auto& a, const auto& b) { return a.check_id < b.check_id; }));
    for (const auto& r : records) {
      CAPTURE(r.to_line());
      CHECK(std::regex_match(r.to_line(), line));
      CHECK(r.verdict == Verdict::kPass);
    }
    CHECK(suite_exit_code(records) == 0);
  }
}

TEST_CASE("capacity from the environment") {
  ::setenv("PARASYM_MAX_COSETS", "1234", 1);
  CHECK(cap_from_environment(99) == 1234);
  ::setenv("PARASYM_MAX_COSETS", "junk", 1);
  CHECK(cap_from_environment(99) == 99);
  ::unsetenv("PARASYM_MAX_COSETS");
  CHECK(cap_from_environment(99) == 99);
}

TEST_CASE("order prediction") {
  const auto g = parse_group_spec("builtin:klein");
  CHECK(predicted_order(3, g) == 192);
  CHECK(predicted_order(4, g) == 3072);
}
