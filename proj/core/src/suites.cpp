#include "parasym/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "parasym/crossed_module.hpp"
#include "parasym/error.hpp"
#include "parasym/homology.hpp"
#include "parasym/morphisms.hpp"
#include "parasym/rewriting.hpp"

namespace parasym {

namespace {

std::optional<GroupPtr> try_parse(std::string_view spec, bool bare_builtin) {
  try {
    return parse_group_spec(spec);
  } catch (const Error&) {
  }
  if (bare_builtin) {
    try {
      return share(make_builtin(spec));
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

}  // namespace

GroupPtr parse_group_spec(std::string_view spec) {
  if (spec.starts_with("builtin:")) return share(make_builtin(spec.substr(8)));
  if (spec.starts_with("file:")) {
    const std::string path(spec.substr(5));
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::kParseError, "cannot read " + path);
    std::stringstream text;
    text << in.rdbuf();
    return share(parse_multiplication_table(text.str()));
  }
  if (spec.starts_with("prod:")) {
    const std::string_view body = spec.substr(5);
    // 'x' also occurs inside names such as c4xc2, so try every split.
    for (std::size_t k = body.find('x'); k != std::string_view::npos; k = body.find('x', k + 1)) {
      auto a = try_parse(body.substr(0, k), true);
      if (!a) continue;
      auto b = try_parse(body.substr(k + 1), true);
      if (!b) continue;
      return share(direct_product(**a, **b));
    }
    throw Error(ErrorKind::kParseError, "cannot split product spec " + std::string(spec));
  }
  throw Error(ErrorKind::kParseError, "group spec needs builtin:, file: or prod: (got " + std::string(spec) + ")");
}

std::uint64_t cap_from_environment(std::uint64_t fallback) {
  const char* v = std::getenv("PARASYM_MAX_COSETS");
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const unsigned long long cap = std::strtoull(v, &end, 10);
  if (*end != '\0' || cap == 0) return fallback;
  return cap;
}

Presentation make_presentation(std::string_view family, std::uint32_t n, GroupPtr g, std::uint32_t t) {
  if (family == "coxeter") return coxeter_presentation(n, g);
  if (family == "transposition") return transposition_presentation(n, g);
  if (family == "interpolating") return interpolating_presentation(n, t, g);
  if (family == "amalgam") return amalgam_presentation(n, g);
  if (family == "hs") return hs_presentation(n, g);
  if (family == "hn") return hn_presentation(n, g);
  if (family == "reflection") return reflection_presentation_sn(n);
  if (family == "exterior") return exterior_square_presentation(g);
  throw Error(ErrorKind::kUnknownName, "unknown presentation family " + std::string(family));
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::kTheorem1, Suite::kCrossedModule, Suite::kEquivalences, Suite::kRewriting,
                  Suite::kHImplications, Suite::kSchur})
    if (name == to_string(s)) return s;
  return std::nullopt;
}

const char* to_string(Suite s) {
  switch (s) {
    case Suite::kTheorem1: return "theorem1";
    case Suite::kCrossedModule: return "crossed-module";
    case Suite::kEquivalences: return "equivalences";
    case Suite::kRewriting: return "rewriting";
    case Suite::kHImplications: return "h-implications";
    case Suite::kSchur: return "schur";
  }
  return "?";
}

int suite_exit_code(const std::vector<VerificationRecord>& records) {
  bool fail = false, open = false;
  for (const auto& r : records) {
    fail = fail || r.verdict == Verdict::kFail;
    open = open || r.verdict == Verdict::kTimeout || r.verdict == Verdict::kInconclusive;
  }
  return fail ? 4 : open ? 3 : 0;
}

std::optional<std::uint64_t> predicted_order(std::uint32_t n, GroupPtr g, const EnumerationOptions& options) {
  auto ex = exterior_square_group(g, options);
  if (!ex) return std::nullopt;
  std::uint64_t order = ex->kernel.order();
  for (std::uint32_t k = 0; k < n; ++k) order *= g->order();
  for (std::uint32_t k = 2; k <= n; ++k) order *= k;
  return order / abelianization(*g).order();
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

class Recorder {
 public:
  Recorder(std::string group, std::uint32_t n) : base_{{"group", std::move(group)}, {"n", std::to_string(n)}} {}

  void run(const std::string& id, const std::function<CheckResult()>& check, Params extra = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult result;
    try {
      result = check();
    } catch (const Error& e) {
      result = e.kind() == ErrorKind::kSizeCapExceeded || e.kind() == ErrorKind::kCapacityExceeded
                   ? CheckResult{Verdict::kInconclusive, e.what()}
                   : CheckResult::fail(e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    Params params = base_;
    params.insert(params.end(), extra.begin(), extra.end());
    records_.push_back(make_record(id, std::move(params), result, ms));
  }

  std::vector<VerificationRecord> take() {
    std::stable_sort(records_.begin(), records_.end(),
                     [](const auto& a, const auto& b) { return a.check_id < b.check_id; });
    return std::move(records_);
  }

 private:
  Params base_;
  std::vector<VerificationRecord> records_;
};

CheckResult equal_or_fail(std::uint64_t got, std::uint64_t want, const std::string& what) {
  if (got == want) return CheckResult::pass(what + "=" + std::to_string(got));
  return CheckResult::fail(what + "=" + std::to_string(got) + " expected " + std::to_string(want));
}

CheckResult certificate_result(const IsoCertificate& c) {
  switch (c.status) {
    case CertificateStatus::kValid: return CheckResult::pass("order=" + std::to_string(c.source_order));
    case CertificateStatus::kInvalid: return CheckResult::fail(c.failure);
    case CertificateStatus::kInconclusive: return CheckResult::timeout(c.failure);
  }
  return CheckResult::fail("unknown certificate status");
}

CheckResult implication_result(const Presentation& source, const std::vector<Word>& targets,
                               const EnumerationOptions& options) {
  const auto verdicts = verify_implication(source, targets, options);
  for (std::size_t k = 0; k < verdicts.size(); ++k)
    if (verdicts[k] == Consequence::kNo) return CheckResult::fail("not a consequence: " + source.word_to_string(targets[k]));
  for (std::size_t k = 0; k < verdicts.size(); ++k)
    if (verdicts[k] == Consequence::kTimeout) return CheckResult::timeout("enumeration capacity");
  return CheckResult::pass(std::to_string(targets.size()) + " relators");
}

void theorem1(Recorder& rec, GroupPtr g, std::uint32_t n, const EnumerationOptions& opt) {
  const Presentation tr = transposition_presentation(n, g);
  const WreathProduct w(*g, n);
  rec.run("theorem1.mu-homomorphism", [&] {
    auto h = verify_homomorphism(tr, w, mu_images(tr, w));
    return h.ok ? CheckResult::pass() : CheckResult::fail(tr.word_to_string(tr.relators()[*h.failing_relator]));
  });
  std::optional<ExteriorSquare> ex;
  rec.run("theorem1.order", [&] {
    auto predicted = predicted_order(n, g, opt);
    auto eg = enumerate_group(coxeter_presentation(n, g), opt);
    if (!predicted || !eg) return CheckResult::timeout("enumeration capacity");
    return equal_or_fail(eg->order(), *predicted, "order");
  });
  std::optional<KernelResult> kernel;
  std::uint64_t image = 0;
  rec.run("theorem1.cokernel", [&] {
    image = image_subgroup_order(n, g);
    return equal_or_fail(w.order() / image, abelianization(*g).order(), "index");
  });
  rec.run("theorem1.kernel", [&] {
    kernel = kernel_of_mu(n, g, opt);
    ex = exterior_square_group(g, opt);
    if (!kernel || !ex) return CheckResult::timeout("enumeration capacity");
    if (kernel->invariants != ex->kernel)
      return CheckResult::fail("ker=" + kernel->invariants.to_string() + " exterior=" + ex->kernel.to_string());
    if (g->is_abelian()) {
      const auto formula = schur_abelian(abelianization(*g));
      if (formula != kernel->invariants)
        return CheckResult::fail("ker=" + kernel->invariants.to_string() + " gcd-formula=" + formula.to_string());
    }
    return CheckResult::pass(kernel->invariants.to_string());
  });
  rec.run("theorem1.kernel-central", [&] {
    if (!kernel) return CheckResult::timeout("kernel not computed");
    return kernel->central ? CheckResult::pass() : CheckResult::fail("a kernel element is not central");
  });
  rec.run("theorem1.order-identity", [&] {
    if (!kernel || image == 0) return CheckResult::timeout("kernel or image not computed");
    return equal_or_fail(kernel->elements.size() * image, kernel->group_order, "ker*im");
  });
}

void crossed_module(Recorder& rec, GroupPtr g, std::uint32_t n, const EnumerationOptions& opt) {
  std::optional<AmalgamModule> m;
  std::string why;
  try {
    m = AmalgamModule::build(n, g, opt);
    if (!m) why = "amalgam enumeration capacity";
  } catch (const Error& e) {
    why = e.what();
  }
  auto step = [&](const char* id, CheckResult (AmalgamModule::*f)() const) {
    rec.run(id, [&] { return m ? ((*m).*f)() : CheckResult{Verdict::kInconclusive, why}; });
  };
  step("crossed-module.action", &AmalgamModule::action_well_defined);
  step("crossed-module.cm1", &AmalgamModule::cm1);
  step("crossed-module.cm2", &AmalgamModule::cm2);
  step("crossed-module.peiffer-simple", &AmalgamModule::peiffer_simple);
  step("crossed-module.kernel-central", &AmalgamModule::kernel_central);
}

void equivalences(Recorder& rec, GroupPtr g, std::uint32_t n, const EnumerationOptions& opt) {
  const Presentation cox = coxeter_presentation(n, g);
  std::vector<Presentation> inter;
  for (std::uint32_t t = 1; t < n; ++t) inter.push_back(interpolating_presentation(n, t, g));
  const Presentation tr = transposition_presentation(n, g);
  int step = 1;
  auto id = [&](const std::string& what) { return "equivalences.step" + std::to_string(step++) + "." + what; };
  rec.run(id("coxeter-s1"), [&] {
    return certificate_result(
        verify_isomorphism(coxeter_to_interpolating(cox, inter[0]), interpolating_to_coxeter(inter[0], cox), opt));
  });
  for (std::uint32_t t = 1; t + 1 < n; ++t)
    rec.run(id("s" + std::to_string(t) + "-s" + std::to_string(t + 1)), [&] {
      return certificate_result(verify_isomorphism(interpolating_embedding(inter[t - 1], inter[t]),
                                                   interpolating_retraction(inter[t], inter[t - 1]), opt));
    });
  rec.run(id("s" + std::to_string(n - 1) + "-transposition"), [&] {
    return certificate_result(verify_isomorphism(interpolating_to_transposition(inter.back(), tr),
                                                 transposition_to_interpolating(tr, inter.back()), opt));
  });
  rec.run(id("transposition-amalgam"), [&] {
    const Presentation am = amalgam_presentation(n, g);
    return certificate_result(
        verify_isomorphism(transposition_to_amalgam(tr, am), amalgam_to_transposition(am, tr), opt));
  });
}

void rewriting(Recorder& rec, GroupPtr g, std::uint32_t n, const EnumerationOptions& opt) {
  constexpr std::size_t kSamples = 200;
  constexpr std::uint64_t kSeed = 1;
  std::optional<TauCheck> c;
  auto get = [&]() -> const TauCheck& {
    if (!c) c = verify_tau_properties(n, g, kSamples, kSeed, opt);
    return *c;
  };
  const Params p{{"samples", std::to_string(kSamples)}, {"seed", std::to_string(kSeed)}};
  rec.run("rewriting.base-case", [&] { return get().base_case; }, p);
  rec.run("rewriting.evaluation", [&] { return get().evaluation; }, p);
  rec.run("rewriting.free-reduction", [&] { return get().free_reduction; }, p);
  rec.run("rewriting.multiplicative", [&] { return get().multiplicative; }, p);
}

void h_implications(Recorder& rec, GroupPtr g, std::uint32_t n, const EnumerationOptions& opt) {
  const Presentation hn = hn_presentation(n, g);
  const Presentation hs = hs_presentation(n, g);
  const char* hnames[] = {"H1", "H2", "H3", "H4", "H5"};
  const HnRelation hrels[] = {HnRelation::kH1, HnRelation::kH2, HnRelation::kH3, HnRelation::kH4, HnRelation::kH5};
  for (int k = 0; k < 5; ++k)
    rec.run(std::string("h-implications.r0-r4-imply.") + hnames[k],
            [&] { return implication_result(hs, hn_relators(hs, hrels[k]), opt); });
  if (n >= 4) {
    const Presentation r03 = hs_presentation(n, g, {HsRelation::kR0, HsRelation::kR1, HsRelation::kR2, HsRelation::kR3});
    const char* rnames[] = {"R0", "R1", "R2", "R3"};
    const HsRelation rrels[] = {HsRelation::kR0, HsRelation::kR1, HsRelation::kR2, HsRelation::kR3};
    for (int k = 0; k < 5; ++k)
      rec.run(std::string("h-implications.r0-r3-imply.") + hnames[k],
              [&] { return implication_result(r03, hn_relators(r03, hrels[k]), opt); });
    for (int k = 0; k < 4; ++k)
      rec.run(std::string("h-implications.h1-h5-imply.") + rnames[k],
              [&] { return implication_result(hn, hs_relators(hn, rrels[k]), opt); });
  }
  rec.run("h-implications.quotient-by-r4", [&] {
    const Presentation q = hn.with_relators(hs_relators(hn, HsRelation::kR4), "hn/R4");
    return certificate_result(verify_isomorphism(same_alphabet_map(q, hs), same_alphabet_map(hs, q), opt));
  });
}

void schur(Recorder& rec, GroupPtr g, const std::string& label, std::uint32_t n, const EnumerationOptions& opt) {
  std::optional<SchurReport> report;
  auto get = [&]() -> const SchurReport& {
    if (!report) report = schur_report(n, g, label, SchurMethod::kAll, opt);
    return *report;
  };
  rec.run("schur.kernel-vs-exterior", [&] {
    const auto& r = get();
    if (!r.via_kernel || !r.via_exterior) return CheckResult::timeout("enumeration capacity");
    if (*r.via_kernel != *r.via_exterior)
      return CheckResult::fail("ker=" + r.via_kernel->to_string() + " exterior=" + r.via_exterior->to_string());
    return CheckResult::pass(r.via_kernel->to_string());
  });
  if (g->is_abelian())
    rec.run("schur.abelian-formula", [&] {
      const auto& r = get();
      if (!r.via_exterior) return CheckResult::timeout("enumeration capacity");
      if (*r.via_abelian_formula != *r.via_exterior)
        return CheckResult::fail("formula=" + r.via_abelian_formula->to_string() +
                                 " exterior=" + r.via_exterior->to_string());
      return CheckResult::pass(r.via_abelian_formula->to_string());
    });
  rec.run("schur.exterior-order", [&] {
    auto ex = exterior_square_group(g, opt);
    if (!ex) return CheckResult::timeout("enumeration capacity");
    if (ex->commutator_image_order != g->derived_subgroup().size())
      return CheckResult::fail("commutator image " + std::to_string(ex->commutator_image_order) + " != |[G,G]|");
    return equal_or_fail(ex->order, ex->commutator_image_order * ex->kernel.order(), "|G^G|");
  });
  rec.run("schur.c-symbols", [&] {
    auto c = c_symbol_subgroup_check(n, g, opt);
    if (!c) return CheckResult::timeout("enumeration capacity");
    return c->ok() ? CheckResult::pass("order=" + std::to_string(c->subgroup_order)) : CheckResult::fail(c->witness);
  });
}

}  // namespace

std::vector<VerificationRecord> run_suite(Suite suite, GroupPtr g, const std::string& group_label, std::uint32_t n,
                                          const EnumerationOptions& options) {
  Recorder rec(group_label, n);
  switch (suite) {
    case Suite::kTheorem1: theorem1(rec, g, n, options); break;
    case Suite::kCrossedModule: crossed_module(rec, g, n, options); break;
    case Suite::kEquivalences: equivalences(rec, g, n, options); break;
    case Suite::kRewriting: rewriting(rec, g, n, options); break;
    case Suite::kHImplications: h_implications(rec, g, n, options); break;
    case Suite::kSchur: schur(rec, g, group_label, n, options); break;
  }
  return rec.take();
}

}  // namespace parasym
