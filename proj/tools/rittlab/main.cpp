#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "rittlab/error.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace rittlab::cli;

  CLI::App app{"Ritt decomposition toolkit: chain lattices, polynomial and additive decompositions"};
  app.require_subcommand(1);
  bool json_only = false;
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", json_only, "Print only the JSON-lines block"); };

  std::string command = "rittlab";
  for (int i = 1; i < argc; ++i) command += std::string(" ") + argv[i];
  RunReport report(command);
  std::function<void()> action;

  auto* group = app.add_subcommand("group", "Permutation-group contexts");
  group->require_subcommand(1);

  GroupVerifyOptions verify;
  std::string theorems = "ritt1,mon,aut,div";
  auto* gv = group->add_subcommand("verify", "Run chain verifiers on a context file");
  gv->add_option("context", verify.path, "Context file")->required();
  gv->add_option("--theorems", theorems, "Comma-separated subset of ritt1,mon,aut,div,indec,rho,dichotomy")
      ->capture_default_str();
  gv->add_flag("--weak-hypothesis", verify.weak_hypothesis,
               "Only require permutability of the subgroups that correspond to lattice members");
  json_flag(gv);
  gv->callback([&] {
    verify.theorems = split_commas(theorems);
    action = [&] { group_verify(verify, report); };
  });

  GroupChainsOptions chains;
  std::vector<std::size_t> walk;
  auto* gc = group->add_subcommand("chains", "List maximal chains with their invariants");
  gc->add_option("context", chains.path, "Context file")->required();
  gc->add_option("--walk", walk, "Exchange walk between chains FROM and TO")->expected(2);
  gc->add_flag("--weak-hypothesis", chains.weak_hypothesis, "Use the weaker permutability hypothesis for --walk");
  json_flag(gc);
  gc->callback([&] {
    if (walk.size() == 2) chains.walk = std::make_pair(walk[0], walk[1]);
    action = [&] { group_chains(chains, report); };
  });

  auto* poly = app.add_subcommand("poly", "Polynomial decompositions");
  poly->require_subcommand(1);
  std::string poly_path;
  auto* pd = poly->add_subcommand("decompose", "All complete decompositions in canonical form");
  pd->add_option("poly-file", poly_path, "Polynomial file")->required();
  json_flag(pd);
  pd->callback([&] { action = [&] { poly_decompose(poly_path, report); }; });
  auto* pi = poly->add_subcommand("invariants", "Aut(f), gamma order, factorable core");
  pi->add_option("poly-file", poly_path, "Polynomial file")->required();
  json_flag(pi);
  pi->callback([&] { action = [&] { poly_invariants(poly_path, report); }; });

  auto* additive = app.add_subcommand("additive", "Additive polynomials as skew polynomials");
  additive->require_subcommand(1);
  std::string skew_path;
  auto* af = additive->add_subcommand("factor", "All complete skew factorizations and the Ore check");
  af->add_option("skew-file", skew_path, "Skew polynomial file")->required();
  json_flag(af);
  af->callback([&] { action = [&] { additive_factor(skew_path, report); }; });

  LaurentOptions laurent;
  auto* lb = app.add_subcommand("laurent-branch", "Laurent branches at infinity and the inertia cycle");
  lb->add_option("--field", laurent.field, "Finite field, e.g. F7")->required();
  lb->add_option("--poly", laurent.poly, "Sparse terms, e.g. \"3:1 1:1\"")->required();
  lb->add_option("--precision", laurent.precision, "Number of negative-degree coefficients (default 2*deg)");
  lb->add_option("--theta", laurent.theta, "Primitive n-th root of unity (default: smallest)");
  json_flag(lb);
  lb->callback([&] { action = [&] { laurent_branch(laurent, report); }; });

  CounterexampleOptions cx;
  auto* ce = app.add_subcommand("counterexample", "Aut orders of a composite and its factors over F_p");
  ce->add_option("--prime", cx.prime, "Prime p")->required();
  ce->add_option("--outer-num", cx.outer_num, "Numerator terms of the outer factor");
  ce->add_option("--outer-den", cx.outer_den, "Denominator terms of the outer factor");
  ce->add_option("--inner-num", cx.inner_num, "Numerator terms of the inner factor");
  ce->add_option("--inner-den", cx.inner_den, "Denominator terms of the inner factor");
  json_flag(ce);
  ce->callback([&] { action = [&] { counterexample(cx, report); }; });

  auto* fixtures = app.add_subcommand("fixtures", "Built-in fixtures");
  fixtures->require_subcommand(1);
  auto* ra = fixtures->add_subcommand("run-all", "Run every verifier on every built-in fixture");
  json_flag(ra);
  ra->callback([&] { action = [&] { fixtures_run_all(report); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    action();
  } catch (const rittlab::TheoremViolated& e) {
    std::cerr << "theorem violated: " << e.what() << "\nwitness: " << e.witness().dump() << "\n";
    return 1;
  } catch (const rittlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  report.write(std::cout, json_only);
  return report.exit_code();
}
