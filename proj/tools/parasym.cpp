// parasym: orders, verification suites, Schur multipliers and τ rewriting
// for the parametrized symmetric groups S_n(G).

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "parasym/error.hpp"
#include "parasym/homology.hpp"
#include "parasym/presentation.hpp"
#include "parasym/rewriting.hpp"
#include "parasym/suites.hpp"

namespace {

using namespace parasym;

constexpr int kExitBadInput = 1;
constexpr int kExitCapacity = 2;

struct Common {
  std::string group = "builtin:c2";
  std::uint32_t n = 3;
  std::uint64_t cap = 0;  // 0: environment or default

  EnumerationOptions options() const {
    EnumerationOptions o;
    o.max_cosets = cap ? cap : cap_from_environment(o.max_cosets);
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_group = true) {
  if (with_group) cmd->add_option("--group", c.group, "builtin:<name>, file:<path> or prod:<A>x<B>");
  cmd->add_option("--n", c.n, "Degree n")->check(CLI::Range(2u, 64u));
  cmd->add_option("--cap", c.cap, "Coset cap (default 10^6, or PARASYM_MAX_COSETS)");
}

int cmd_order(const Common& c, const std::string& family, std::uint32_t t, bool dump_presentation, bool dump_table) {
  const GroupPtr g = parse_group_spec(c.group);
  const Presentation p = make_presentation(family, c.n, g, t);
  if (dump_presentation) std::cout << p.dump();
  const CosetTable table = todd_coxeter(p, {}, c.options());
  if (!table.complete()) {
    std::cout << "capacity-exceeded cap=" << c.options().max_cosets << '\n';
    return kExitCapacity;
  }
  if (dump_table) std::cout << table.dump();
  std::cout << table.coset_count() << '\n';
  return 0;
}

int cmd_verify(const Common& c, const std::string& suite_name) {
  const auto suite = parse_suite(suite_name);
  if (!suite) throw Error(ErrorKind::kUnknownName, "unknown suite " + suite_name);
  const GroupPtr g = parse_group_spec(c.group);
  const auto records = run_suite(*suite, g, c.group, c.n, c.options());
  for (const auto& r : records) std::cout << r.to_line() << '\n';
  return suite_exit_code(records);
}

int cmd_schur(const Common& c, const std::string& method_name) {
  const GroupPtr g = parse_group_spec(c.group);
  SchurMethod method = SchurMethod::kAll;
  if (method_name == "kernel")
    method = SchurMethod::kKernel;
  else if (method_name == "exterior")
    method = SchurMethod::kExterior;
  else if (method_name == "abelian")
    method = SchurMethod::kAbelian;
  else if (method_name != "all")
    throw Error(ErrorKind::kUnknownName, "unknown method " + method_name);
  const SchurReport r = schur_report(c.n, g, c.group, method, c.options());
  auto show = [](const char* name, const std::optional<AbelianInvariants>& v) {
    std::cout << name << '=' << (v ? v->to_string() : std::string("unavailable")) << '\n';
  };
  std::cout << "group=" << c.group << '\n';
  if (method == SchurMethod::kAll || method == SchurMethod::kKernel) show("kernel", r.via_kernel);
  if (method == SchurMethod::kAll || method == SchurMethod::kExterior) show("exterior", r.via_exterior);
  if (method == SchurMethod::kAll || method == SchurMethod::kAbelian) {
    if (g->is_abelian())
      show("abelian", r.via_abelian_formula);
    else
      std::cout << "abelian=not-applicable\n";
  }
  std::cout << "consistent=" << (r.consistent ? "true" : "false") << '\n';
  return r.consistent ? 0 : 3;
}

int cmd_rewrite(const Common& c, const std::string& text) {
  std::vector<IndexedLetter<std::string>> word;
  for (const auto& l : parse_word_text(text, c.n)) {
    if (l.kind != SymbolKind::kTransposition)
      throw Error(ErrorKind::kParseError, "rewrite reads (ij)_a letters only");
    word.push_back({l.i, l.j, l.label, l.inverse});
  }
  TauState state(c.n);
  for (const auto& l : word) state.next(l.i, l.j, l.inverse);
  if (!state.trivial())
    std::cerr << "warning: the word's permutation is not trivial; the result is a coset expression\n";
  const auto out = rewrite_tau(word, c.n);
  const char* sep = c.n >= 10 ? "," : "";
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k) std::cout << ' ';
    std::cout << "h_{" << out[k].i << sep << out[k].j << "}(" << out[k].label << ')' << (out[k].inverse ? "^-1" : "");
  }
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parametrized symmetric groups S_n(G): enumeration and verification"};
  app.require_subcommand(1);

  Common common;
  std::string family = "transposition";
  std::uint32_t t = 1;
  bool dump_presentation = false, dump_table = false;
  auto* order = app.add_subcommand("order", "Enumerate a presentation and print its order");
  add_common(order, common);
  order->add_option("--family", family, "coxeter, transposition, interpolating, amalgam, hs, hn, reflection, exterior");
  order->add_option("--t", t, "Parameter t of the interpolating family")->check(CLI::PositiveNumber);
  order->add_flag("--dump-presentation", dump_presentation, "Print generators and relators first");
  order->add_flag("--dump-table", dump_table, "Print the standardized coset table");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and print one record per check");
  verify->add_option("suite", suite, "theorem1, crossed-module, equivalences, rewriting, h-implications, schur")
      ->required();
  add_common(verify, common);

  std::string method = "all";
  auto* schur = app.add_subcommand("schur", "Schur multiplier by kernel, exterior square and/or abelian formula");
  add_common(schur, common);
  schur->add_option("--method", method, "kernel, exterior, abelian or all");

  std::string word;
  auto* rewrite = app.add_subcommand("rewrite", "Apply the rewriting process τ to a word in (ij)_a");
  add_common(rewrite, common, false);
  rewrite->add_option("--word", word, "Whitespace-separated letters such as (12)_a (23)_e^-1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (*order) return cmd_order(common, family, t, dump_presentation, dump_table);
    if (*verify) return cmd_verify(common, suite);
    if (*schur) return cmd_schur(common, method);
    if (*rewrite) return cmd_rewrite(common, word);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
