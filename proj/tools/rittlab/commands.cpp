#include "commands.hpp"

#include <filesystem>
#include <functional>
#include <map>

#include "rittlab/additive.hpp"
#include "rittlab/chains.hpp"
#include "rittlab/error.hpp"
#include "rittlab/fixtures.hpp"
#include "rittlab/laurent.hpp"
#include "rittlab/polyfield.hpp"
#include "rittlab/ratfunc.hpp"
#include "rittlab/small_groups.hpp"

namespace rittlab::cli {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

template <class T>
std::string bracket(const std::vector<T>& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) {
    if constexpr (std::is_same_v<T, std::string>) {
      parts.push_back(x);
    } else {
      parts.push_back(std::to_string(x));
    }
  }
  return "[" + join(parts, ", ") + "]";
}

std::string file_stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

// The "name:" entry of a key/value file, else the file stem.
std::string name_of(const std::string& text, const std::string& path) {
  const auto kv = parse_key_values(text);
  const auto it = kv.find("name");
  return it != kv.end() ? it->second : file_stem(path);
}

std::string describe_group(const PermutationGroup& g) {
  return group_type_label(g) + " on " + std::to_string(g.degree()) + " points";
}

using Verifier = std::function<TheoremReport(const ChainContext&, Hypothesis)>;

const std::map<std::string, Verifier>& group_verifiers() {
  static const std::map<std::string, Verifier> table{
      {"ritt1", [](const ChainContext& c, Hypothesis h) { return verify_ritt_first(c, h); }},
      {"mon", [](const ChainContext& c, Hypothesis) { return verify_monodromy_invariant(c); }},
      {"aut", [](const ChainContext& c, Hypothesis) { return verify_aut_invariant(c); }},
      {"div", [](const ChainContext& c, Hypothesis) { return verify_divisibility_all(c); }},
      {"indec", [](const ChainContext& c, Hypothesis) { return verify_indecomposable_equivalences(c); }},
      {"rho", [](const ChainContext& c, Hypothesis) { return verify_rho_bijection(c); }},
      {"dichotomy", [](const ChainContext& c, Hypothesis) { return scan_monodromy_dichotomy(c); }},
  };
  return table;
}

const std::vector<std::string> kAllGroupTheorems{"ritt1", "mon", "aut", "div", "indec", "rho", "dichotomy"};

ChainContext load_context(const std::string& path) {
  const std::string text = read_text_file(path);
  ContextSpec spec = parse_context(text);
  if (spec.name.empty()) spec.name = file_stem(path);
  return ChainContext::from_spec(spec);
}

void verify_context(const ChainContext& ctx, const std::vector<std::string>& theorems, Hypothesis hyp,
                    RunReport& report) {
  for (const auto& t : theorems) {
    const auto it = group_verifiers().find(t);
    if (it == group_verifiers().end()) throw InvalidArgument("unknown theorem '" + t + "'");
    report.add(run_check(ctx.name(), t, [&] { return it->second(ctx, hyp); }));
  }
}

std::string decomposition_string(const Decomposition& d) {
  std::vector<std::string> parts;
  for (const auto& f : d.factors) parts.push_back(f.to_string());
  return join(parts, " o ");
}

std::vector<std::size_t> factor_aut_orders(const Decomposition& d) {
  std::vector<std::size_t> out;
  for (const auto& f : d.factors) out.push_back(aut_group(f).size());
  return out;
}

std::string linear_string(const LinearPoly& l) { return l.as_poly().to_string(); }

std::vector<std::string> branch_row(const LaurentBranch& b) {
  std::vector<std::string> row{b.c.to_string()};
  for (const auto& a : b.tail) row.push_back(a.to_string());
  return row;
}

// Branches at the given precision, their residual check, agreement of the
// first coefficients with a run at twice the precision, and the inertia cycle.
void laurent_items(const std::string& context, const Poly& f, std::size_t precision,
                   const std::optional<Scalar>& theta, RunReport& report) {
  const auto leads = branch_leading_coefficients(f);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"c"};
  for (std::size_t i = 0; i <= precision; ++i) header.push_back(i == 0 ? "a_0" : "a_-" + std::to_string(i));
  rows.push_back(header);

  RunItem branch{context, "laurent", Status::pass, "", json::object()};
  json branches = json::array();
  std::size_t checked = 0;
  for (const auto& c : leads) {
    const LaurentBranch b = solve_branch(f, c, precision);
    const LaurentBranch longer = solve_branch(f, c, 2 * precision);
    rows.push_back(branch_row(b));
    const auto residuals = branch_residuals(f, b);
    checked += residuals.size();
    const bool vanish = verify_branch(f, b);
    const bool stable = std::equal(b.tail.begin(), b.tail.end(), longer.tail.begin());
    json coeffs = json::array();
    for (const auto& a : b.tail) coeffs.push_back(a.to_string());
    branches.push_back(json{{"c", c.to_string()}, {"tail", coeffs}, {"residuals_vanish", vanish}, {"stable", stable}});
    if (!vanish || !stable) branch.status = Status::fail;
  }
  branch.summary = std::to_string(leads.size()) + " branches, " + std::to_string(checked) +
                   " residual coefficients checked, precision " + std::to_string(precision) + " vs " +
                   std::to_string(2 * precision);
  branch.details = json{{"poly", f.to_string()}, {"field", f.field().name()}, {"precision", precision},
                        {"branches", branches}, {"summary", branch.summary}};
  report.line("branches of " + f.to_string() + " over " + f.field().name() + " at precision " +
              std::to_string(precision) + ":");
  for (const auto& l : format_table(rows)) report.line("  " + l);
  report.add(std::move(branch));

  report.add(run_check(context, "inertia", [&] {
    const InertiaCycle cyc = monodromy_at_infinity(f, precision, theta);
    std::vector<std::string> labels;
    for (const auto& b : cyc.branches) labels.push_back(b.c.to_string());
    TheoremReport r;
    r.theorem = "inertia";
    r.summary = "theta = " + cyc.theta.to_string() + " permutes branches " + bracket(labels) + " as " +
                cyc.permutation.to_cycle_string();
    r.details = json{{"theta", cyc.theta.to_string()},
                     {"branches", labels},
                     {"permutation", cyc.permutation.to_cycle_string()},
                     {"cycle_type", cyc.permutation.cycle_type()}};
    return r;
  }));
}

}  // namespace

void group_verify(const GroupVerifyOptions& o, RunReport& report) {
  const ChainContext ctx = load_context(o.path);
  verify_context(ctx, o.theorems, o.weak_hypothesis ? Hypothesis::weak_permutability : Hypothesis::quasi_hamiltonian,
                 report);
}

void group_chains(const GroupChainsOptions& o, RunReport& report) {
  const ChainContext ctx = load_context(o.path);
  const auto chains = maximal_chains(ctx);
  report.line("context " + ctx.name() + ": |G| = " + std::to_string(ctx.group().order()) + ", degree " +
              std::to_string(ctx.group().degree()) + ", " + std::to_string(ctx.lattice().size()) +
              " groups between H and G, " + std::to_string(chains.size()) + " maximal chains");

  std::vector<std::vector<std::string>> rows{{"chain", "members", "orders", "indices", "monodromy", "aut"}};
  json listed = json::array();
  for (std::size_t i = 0; i < chains.size(); ++i) {
    const auto inv = chain_invariants(ctx, chains[i]);
    std::vector<std::string> mon, aut;
    for (const auto& q : inv.monodromy_quotients) mon.push_back(describe_group(q));
    for (const auto& a : inv.aut_quotients) aut.push_back(a.type);
    rows.push_back({std::to_string(i), bracket(chains[i].members), describe_chain(ctx, chains[i]), bracket(inv.indices), bracket(mon), bracket(aut)});
    listed.push_back(json{{"chain", i},
                          {"members", chains[i].members},
                          {"orders", describe_chain(ctx, chains[i])},
                          {"indices", inv.indices},
                          {"monodromy", mon},
                          {"aut", aut}});
  }
  for (const auto& l : format_table(rows)) report.line(l);
  report.add(RunItem{ctx.name(), "chains", Status::pass, std::to_string(chains.size()) + " maximal chains",
                     json{{"chains", listed}}});

  if (!o.walk) return;
  const auto [from, to] = *o.walk;
  if (from >= chains.size() || to >= chains.size()) {
    throw InvalidArgument("--walk needs chain numbers below " + std::to_string(chains.size()));
  }
  const Hypothesis hyp = o.weak_hypothesis ? Hypothesis::weak_permutability : Hypothesis::quasi_hamiltonian;
  report.add(run_check(ctx.name(), "walk", [&] {
    const ExchangeWalk walk = exchange_walk(ctx, chains[from], chains[to], hyp);
    json steps = json::array();
    report.line("");
    report.line("exchange walk " + std::to_string(from) + " -> " + std::to_string(to) + ":");
    for (std::size_t k = 0; k < walk.chains.size(); ++k) {
      const std::string desc = describe_chain(ctx, walk.chains[k]) + "  members " + bracket(walk.chains[k].members);
      report.line("  step " + std::to_string(k) + ": " + desc);
      steps.push_back(desc);
      if (k > 0) {
        if (auto why = check_exchange_step(ctx, walk.chains[k - 1], walk.chains[k])) {
          throw TheoremViolated("invalid exchange step: " + *why, json{{"step", k}, {"chain", desc}});
        }
      }
    }
    TheoremReport r;
    r.theorem = "walk";
    r.summary = std::to_string(walk.steps()) + " exchange steps, all valid";
    r.details = json{{"from", from}, {"to", to}, {"steps", steps}};
    return r;
  }));
}

void poly_decompose(const std::string& path, RunReport& report) {
  const std::string text = read_text_file(path);
  const std::string name = name_of(text, path);
  const Poly f = parse_poly_file(text);
  report.line("f = " + f.to_string() + " over " + f.field().name() + ", degree " + std::to_string(f.degree()));
  const auto decs = all_complete_decompositions(f);
  std::vector<std::vector<std::string>> rows{{"#", "decomposition", "degrees", "aut"}};
  json listed = json::array();
  for (std::size_t i = 0; i < decs.size(); ++i) {
    const auto degrees = decs[i].degrees();
    const auto auts = factor_aut_orders(decs[i]);
    rows.push_back({std::to_string(i + 1), decomposition_string(decs[i]), bracket(degrees), bracket(auts)});
    std::vector<std::string> factors;
    for (const auto& g : decs[i].factors) factors.push_back(g.to_string());
    listed.push_back(json{{"factors", factors}, {"degrees", degrees}, {"aut", auts}});
  }
  for (const auto& l : format_table(rows)) report.line(l);
  report.add(RunItem{name, "decompose", Status::pass, std::to_string(decs.size()) + " complete decompositions",
                     json{{"poly", f.to_string()}, {"field", f.field().name()}, {"decompositions", listed}}});
  report.add(run_check(name, "poly", [&] { return verify_poly_theorems(f); }));
}

void poly_invariants(const std::string& path, RunReport& report) {
  const std::string text = read_text_file(path);
  const std::string name = name_of(text, path);
  const Poly f = parse_poly_file(text);
  report.line("f = " + f.to_string() + " over " + f.field().name());

  const auto aut = aut_group(f);
  std::vector<std::string> maps;
  for (const auto& m : aut) maps.push_back(linear_string(m));
  const GammaOrder gamma = gamma_order(f);
  const std::string gamma_text = gamma.infinite ? "infinite" : std::to_string(gamma.order);
  const CompositionPair core = factorable_core(f);
  std::string factorable;
  try {
    factorable = is_factorable(f) ? "yes" : "no";
  } catch (const CapExceeded&) {
    factorable = "not checked (degree above " + std::to_string(kMaxFactorableDegree) + ")";
  }

  report.line("Aut(f)          " + std::to_string(aut.size()) + " " + bracket(maps));
  report.line("gamma order     " + gamma_text);
  report.line("factorable core " + core.g.to_string() + " o " + core.h.to_string());
  report.line("factorable      " + factorable);
  report.add(RunItem{name, "invariants", Status::pass,
                     "|Aut| = " + std::to_string(aut.size()) + ", gamma " + gamma_text,
                     json{{"poly", f.to_string()},
                          {"field", f.field().name()},
                          {"aut", maps},
                          {"gamma_order", gamma_text},
                          {"core_outer", core.g.to_string()},
                          {"core_inner", core.h.to_string()},
                          {"factorable", factorable}}});
}

void additive_factor(const std::string& path, RunReport& report) {
  const std::string text = read_text_file(path);
  const std::string name = name_of(text, path);
  const SkewPoly f = parse_skew_file(text);
  report.line("f = " + f.to_string() + " over " + f.field().name() + ", additive form " + to_additive(f).to_string());
  const auto facs = all_complete_skew_factorizations(f);
  std::vector<std::vector<std::string>> rows{{"#", "factorization", "tau-degrees"}};
  json listed = json::array();
  for (std::size_t i = 0; i < facs.size(); ++i) {
    std::vector<std::string> parts;
    std::vector<int> degrees;
    for (const auto& u : facs[i]) {
      parts.push_back("(" + u.to_string() + ")");
      degrees.push_back(u.degree());
    }
    rows.push_back({std::to_string(i + 1), join(parts, ""), bracket(degrees)});
    listed.push_back(json{{"factors", parts}, {"degrees", degrees}});
  }
  for (const auto& l : format_table(rows)) report.line(l);
  report.add(RunItem{name, "factor", Status::pass, std::to_string(facs.size()) + " complete factorizations",
                     json{{"skew", f.to_string()}, {"field", f.field().name()}, {"factorizations", listed}}});
  report.add(run_check(name, "ore", [&] { return verify_ore_invariance(f); }));
}

void laurent_branch(const LaurentOptions& o, RunReport& report) {
  const Field field = Field::parse(o.field);
  const Poly f = parse_terms(field, o.poly);
  const std::size_t precision = o.precision.value_or(default_precision(f));
  std::optional<Scalar> theta;
  if (o.theta) theta = Scalar::parse(field, *o.theta);
  laurent_items(f.to_string(), f, precision, theta, report);
}

void counterexample(const CounterexampleOptions& o, RunReport& report) {
  const bool custom = o.outer_num || o.outer_den || o.inner_num || o.inner_den;
  if (!custom) {
    report.add(run_check("p=" + std::to_string(o.prime), "counterexample",
                         [&] { return counterexample_report(o.prime); }));
    const auto& d = report.items().back().details;
    if (d.contains("aut_f")) {
      report.line("f1 = " + d["inner"].get<std::string>() + ", f2 = " + d["outer"].get<std::string>() +
                  ", f = f2 o f1 = " + d["f"].get<std::string>() + " over " + d["field"].get<std::string>());
      report.line("|Aut(f)| = " + d["aut_f"].dump() + ", |Aut(f2)| = " + d["aut_outer"].dump() +
                  ", |Aut(f1)| = " + d["aut_inner"].dump());
    }
    return;
  }
  if (!o.outer_num || !o.inner_num) throw InvalidArgument("--outer-num and --inner-num are both required");
  const Field field = Field::prime(o.prime);
  auto side = [&](const std::optional<std::string>& num, const std::optional<std::string>& den) {
    return RationalFunction(parse_terms(field, *num), den ? parse_terms(field, *den) : Poly::from_ints(field, {1}));
  };
  const RationalFunction outer = side(o.outer_num, o.outer_den);
  const RationalFunction inner = side(o.inner_num, o.inner_den);
  report.add(run_check("p=" + std::to_string(o.prime), "aut-divisibility",
                       [&] { return composition_aut_report(outer, inner); }));
}

void fixtures_run_all(RunReport& report) {
  // Group contexts: one row per fixture, one column per verifier.
  std::vector<std::vector<std::string>> matrix{{"context"}};
  for (const auto& t : kAllGroupTheorems) matrix[0].push_back(t);
  for (const auto& fx : fixture_catalog()) {
    const ChainContext ctx = load_fixture(fx.name);
    const std::size_t first = report.items().size();
    verify_context(ctx, kAllGroupTheorems, Hypothesis::quasi_hamiltonian, report);
    std::vector<std::string> row{fx.name};
    for (std::size_t i = first; i < report.items().size(); ++i) {
      const Status s = report.items()[i].status;
      row.push_back(s == Status::pass ? "pass" : s == Status::fail ? "FAIL" : "-");
    }
    matrix.push_back(row);
  }
  report.line("group contexts (- = hypothesis not met):");
  for (const auto& l : format_table(matrix)) report.line("  " + l);

  report.add(run_check("m16", "nondedekind", [] {
    const ChainContext m16 = load_fixture("m16");
    const auto u = find_nonnormal_subgroup(m16.group());
    if (!u) throw InternalInconsistency("M16 has no non-normal subgroup");
    return witness_nondedekind_failure(m16.group(), *u);
  }));

  std::vector<std::vector<std::string>> polys{{"poly", "field", "decompositions", "status"}};
  for (const auto& fx : polynomial_catalog()) {
    const Poly f = parse_poly_file(fx.text);
    report.add(run_check(fx.name, "poly", [&] { return verify_poly_theorems(f); }));
    polys.push_back({fx.name, f.field().name(), std::to_string(all_complete_decompositions(f).size()),
                     to_string(report.items().back().status)});
  }
  report.line("");
  report.line("polynomials:");
  for (const auto& l : format_table(polys)) report.line("  " + l);

  std::vector<std::vector<std::string>> skews{{"skew", "field", "factorizations", "status"}};
  for (const auto& fx : skew_catalog()) {
    const SkewPoly f = parse_skew_file(fx.text);
    report.add(run_check(fx.name, "ore", [&] { return verify_ore_invariance(f); }));
    skews.push_back({fx.name, f.field().name(), std::to_string(all_complete_skew_factorizations(f).size()),
                     to_string(report.items().back().status)});
  }
  report.line("");
  report.line("skew polynomials:");
  for (const auto& l : format_table(skews)) report.line("  " + l);

  const Field f7 = Field::prime(7);
  for (const auto& [name, f] : std::vector<std::pair<std::string, Poly>>{
           {"x3_f7", Poly::from_ints(f7, {0, 0, 0, 1})}, {"x3_x_f7", Poly::from_ints(f7, {0, 1, 0, 1})}}) {
    report.line("");
    laurent_items(name, f, 10, std::nullopt, report);
  }

  for (std::uint32_t p : {7u, 13u}) {
    report.add(run_check("p=" + std::to_string(p), "counterexample", [p] { return counterexample_report(p); }));
  }
}

}  // namespace rittlab::cli
