// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails. Expected values come from the brute-force
// oracles in tests/support, not from the library under test.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "rittlab/additive.hpp"
#include "rittlab/chains.hpp"
#include "rittlab/fixtures.hpp"
#include "rittlab/laurent.hpp"
#include "rittlab/polyfield.hpp"

namespace {

using namespace rittlab;
using nlohmann::json;
using oracle::ElementSet;

struct Outcome {
  bool ok = true;
  std::string note;
};

// Collects the first few failures of a criterion.
class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ++failures_;
    if (failures_ <= 5) notes_.push_back(what);
  }
  Outcome outcome(std::string summary) const {
    if (failures_ == 0) return {true, std::move(summary)};
    std::string note = std::to_string(failures_) + " failure(s): ";
    for (std::size_t i = 0; i < notes_.size(); ++i) note += (i ? "; " : "") + notes_[i];
    return {false, note};
  }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

struct Process {
  int exit_code = -1;
  std::string out;
};

Process run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + RITTLAB_CLI + "\" " + args + " 2>/dev/null";
  Process p;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return p;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), n);
  const int status = pclose(pipe);
  p.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() == '{') out.push_back(json::parse(line));
  }
  return out;
}

std::vector<std::string> fixtures_with_transitive_subgroup() {
  std::vector<std::string> out;
  for (const auto& f : fixture_catalog()) {
    if (parse_context(f.text).a_generators) out.push_back(f.name);
  }
  return out;
}

// ---- group-side oracles -----------------------------------------------------

std::vector<ElementSet> oracle_between(const ChainContext& ctx) {
  const auto h = oracle::raw_elements(ctx.stabilizer());
  std::vector<ElementSet> out;
  for (const auto& u : oracle::all_subgroups(oracle::raw_elements(ctx.group()), ctx.group().degree())) {
    if (oracle::subset(h, u)) out.push_back(u);
  }
  return out;
}

// big > small with nothing strictly between them.
bool oracle_covers(const std::vector<ElementSet>& between, const ElementSet& big, const ElementSet& small) {
  if (big == small || !oracle::subset(small, big)) return false;
  return std::none_of(between.begin(), between.end(), [&](const ElementSet& w) {
    return w != big && w != small && oracle::subset(small, w) && oracle::subset(w, big);
  });
}

bool oracle_maximal_chain(const ChainContext& ctx, const std::vector<ElementSet>& between, const Chain& c) {
  if (c.members.front() != ctx.top() || c.members.back() != 0) return false;
  for (std::size_t i = 0; i + 1 < c.members.size(); ++i) {
    if (!oracle_covers(between, oracle::raw_elements(ctx.member(c.members[i])),
                       oracle::raw_elements(ctx.member(c.members[i + 1])))) {
      return false;
    }
  }
  return true;
}

std::vector<std::size_t> sorted_indices(const ChainContext& ctx, const Chain& c) {
  auto v = chain_indices(ctx, c);
  std::sort(v.begin(), v.end());
  return v;
}

// Coset images of each step, as oracle element sets with their degree.
std::vector<std::pair<ElementSet, std::size_t>> oracle_quotients(const ChainContext& ctx, const Chain& c) {
  std::vector<std::pair<ElementSet, std::size_t>> out;
  for (std::size_t i = 0; i + 1 < c.members.size(); ++i) {
    const auto& v = ctx.member(c.members[i]);
    const auto& w = ctx.member(c.members[i + 1]);
    out.emplace_back(oracle::coset_image(oracle::raw_elements(v), oracle::raw_elements(w)), v.order() / w.order());
  }
  return out;
}

// Multiset equality up to permutation isomorphism, by greedy matching.
bool same_classes(std::vector<std::pair<ElementSet, std::size_t>> a, std::vector<std::pair<ElementSet, std::size_t>> b) {
  if (a.size() != b.size()) return false;
  for (const auto& [ga, da] : a) {
    auto it = std::find_if(b.begin(), b.end(), [&](const auto& gb) {
      return gb.second == da && gb.first.size() == ga.size() && oracle::permutation_isomorphic(ga, gb.first, da);
    });
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

// ---- criteria ---------------------------------------------------------------

Outcome counterexample_cli() {
  Checker check;
  const std::map<std::uint32_t, std::uint32_t> nonresidue{{7, 3}, {13, 2}};
  for (const auto& [p, nr] : nonresidue) {
    const auto start = std::chrono::steady_clock::now();
    const auto proc = run_cli("counterexample --prime " + std::to_string(p) + " --json");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string ctx = "p=" + std::to_string(p);
    check.expect(proc.exit_code == 0, ctx + " exit code " + std::to_string(proc.exit_code));
    check.expect(secs < 5.0, ctx + " took " + std::to_string(secs) + " s");
    const auto lines = json_lines(proc.out);
    const auto it = std::find_if(lines.begin(), lines.end(), [](const json& j) { return j["theorem"] == "counterexample"; });
    check.expect(it != lines.end(), ctx + " no counterexample item");
    if (it == lines.end()) continue;
    const auto& d = (*it)["details"];
    check.expect((*it)["status"] == "pass", ctx + " status " + (*it)["status"].dump());
    // Independent counts on the projective line over F_{p^2}.
    const auto want_f = oracle::mobius_automorphism_count(p, {1, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 1}, nr);
    const auto want_outer = oracle::mobius_automorphism_count(p, {0, -3, 0, 1}, {1}, nr);
    const auto want_inner = oracle::mobius_automorphism_count(p, {1, 0, 1}, {0, 1}, nr);
    check.expect(want_f == 6 && want_outer == 1 && want_inner == 2, ctx + " oracle disagrees with (6, 1, 2)");
    check.expect(d["aut_f"] == want_f, ctx + " aut_f " + d["aut_f"].dump());
    check.expect(d["aut_outer"] == want_outer, ctx + " aut_outer " + d["aut_outer"].dump());
    check.expect(d["aut_inner"] == want_inner, ctx + " aut_inner " + d["aut_inner"].dump());
    check.expect(d["divides"] == false, ctx + " divides flag");
    check.expect((want_outer * want_inner) % want_f != 0, ctx + " oracle finds divisibility");
  }
  return check.outcome("p=7 and p=13: |Aut| = (6, 1, 2), 6 does not divide 2");
}

Outcome ritt_first() {
  Checker check;
  std::size_t contexts = 0, walks = 0, steps = 0;
  for (const auto& name : fixtures_with_transitive_subgroup()) {
    const auto ctx = load_fixture(name);
    const auto& a = *ctx.transitive_subgroup();
    if (!oracle::quasi_hamiltonian(oracle::raw_elements(a), a.degree())) continue;
    ++contexts;
    const auto between = oracle_between(ctx);
    const auto chains = maximal_chains(ctx);
    check.expect(!chains.empty(), name + " has no chains");
    for (const auto& c : chains) {
      check.expect(oracle_maximal_chain(ctx, between, c), name + " chain not maximal per oracle");
      check.expect(c.length() == chains.front().length(), name + " lengths differ");
      check.expect(sorted_indices(ctx, c) == sorted_indices(ctx, chains.front()), name + " index multisets differ");
    }
    for (const auto& from : chains)
      for (const auto& to : chains) {
        const auto w = exchange_walk(ctx, from, to);
        ++walks;
        check.expect(!w.chains.empty() && w.chains.front() == from && w.chains.back() == to, name + " walk endpoints");
        for (std::size_t s = 1; s < w.chains.size(); ++s) {
          ++steps;
          const auto& prev = w.chains[s - 1];
          const auto& next = w.chains[s];
          check.expect(!check_exchange_step(ctx, prev, next), name + " library rejects a step");
          std::size_t diff = 0;
          for (std::size_t i = 0; i < prev.members.size() && prev.members.size() == next.members.size(); ++i) {
            diff += prev.members[i] != next.members[i];
          }
          check.expect(prev.members.size() == next.members.size() && diff == 1 &&
                           oracle_maximal_chain(ctx, between, next),
                       name + " step fails the oracle");
        }
      }
    check.expect(verify_ritt_first(ctx).status == Status::pass, name + " verify_ritt_first");
  }
  check.expect(contexts > 0, "no quasi-Hamiltonian contexts");
  return check.outcome(std::to_string(contexts) + " contexts, " + std::to_string(walks) + " walks, " +
                       std::to_string(steps) + " steps validated");
}

std::vector<std::string> dedekind_fixtures() {
  std::vector<std::string> out;
  for (const auto& name : fixtures_with_transitive_subgroup()) {
    const auto ctx = load_fixture(name);
    const auto& a = *ctx.transitive_subgroup();
    if (oracle::dedekind(oracle::raw_elements(a), a.degree())) out.push_back(name);
  }
  return out;
}

Outcome monodromy_invariant() {
  Checker check;
  const auto names = dedekind_fixtures();
  for (const auto& name : names) {
    const auto ctx = load_fixture(name);
    const auto chains = maximal_chains(ctx);
    const auto first = oracle_quotients(ctx, chains.front());
    for (const auto& c : chains) {
      const auto q = oracle_quotients(ctx, c);
      check.expect(same_classes(q, first), name + " quotient classes differ");
      const auto inv = chain_invariants(ctx, c);
      for (std::size_t i = 0; i < q.size(); ++i) {
        check.expect(oracle::permutation_isomorphic(oracle::raw_elements(inv.monodromy_quotients[i]), q[i].first, q[i].second),
                     name + " library quotient differs from oracle");
      }
    }
    check.expect(verify_monodromy_invariant(ctx).status == Status::pass, name + " verify_monodromy_invariant");
    if (name == "d6") {
      for (const auto& c : chains) {
        std::multiset<std::pair<std::size_t, std::size_t>> shape;  // (degree, order)
        for (const auto& [g, deg] : oracle_quotients(ctx, c)) shape.insert({deg, g.size()});
        check.expect(shape == std::multiset<std::pair<std::size_t, std::size_t>>{{2, 2}, {3, 6}},
                     "d6 multiset is not {C2 on 2 points, S3 on 3 points}");
      }
    }
  }
  check.expect(std::find(names.begin(), names.end(), "d6") != names.end(), "d6 is not a Dedekind-A fixture");
  return check.outcome(std::to_string(names.size()) + " Dedekind-A fixtures; d6 gives {C2 on 2, S3 on 3}");
}

Outcome aut_and_divisibility() {
  Checker check;
  const auto names = dedekind_fixtures();
  for (const auto& name : names) {
    const auto ctx = load_fixture(name);
    check.expect(verify_aut_invariant(ctx).status == Status::pass, name + " aut invariant");
    check.expect(verify_divisibility_all(ctx).status == Status::pass, name + " divisibility");
    const auto g = oracle::raw_elements(ctx.group());
    const auto h = oracle::raw_elements(ctx.stabilizer());
    const auto top = oracle::normalizer(g, h).size() / h.size();
    for (const auto& c : maximal_chains(ctx)) {
      std::size_t product = 1;
      std::multiset<std::size_t> orders;
      for (std::size_t i = 0; i + 1 < c.members.size(); ++i) {
        const auto v = oracle::raw_elements(ctx.member(c.members[i]));
        const auto w = oracle::raw_elements(ctx.member(c.members[i + 1]));
        const auto q = oracle::normalizer(v, w).size() / w.size();
        product *= q;
        orders.insert(q);
      }
      check.expect(product % top == 0, name + " oracle divisibility fails");
      std::multiset<std::size_t> lib;
      for (const auto& aq : chain_invariants(ctx, c).aut_quotients) lib.insert(aq.order);
      check.expect(lib == orders, name + " aut quotient orders differ from oracle");
    }
  }
  // M16: quasi-Hamiltonian, not Dedekind; a non-normal U breaks divisibility.
  const auto m16 = load_fixture("m16").group();
  const auto raw = oracle::raw_elements(m16);
  check.expect(oracle::quasi_hamiltonian(raw, 16) && !oracle::dedekind(raw, 16), "m16 predicates");
  const auto u = find_nonnormal_subgroup(m16);
  check.expect(u.has_value(), "m16 has no non-normal subgroup");
  std::string witness;
  if (u) {
    const auto ru = oracle::raw_elements(*u);
    const auto quotient = oracle::normalizer(raw, ru).size() / ru.size();
    check.expect(oracle::normalizer(raw, ru) != raw, "oracle says U is normal");
    check.expect((ru.size() * quotient) % raw.size() != 0, "oracle finds divisibility");
    const auto r = witness_nondedekind_failure(m16, *u);
    check.expect(r.status == Status::pass, "witness_nondedekind_failure did not pass");
    check.expect(r.details["aut"] == raw.size() && r.details["aut_inner"] == ru.size() &&
                     r.details["aut_outer"] == quotient,
                 "witness details differ from oracle");
    witness = "; m16: 16 does not divide " + std::to_string(ru.size()) + "*" + std::to_string(quotient);
  }
  return check.outcome(std::to_string(names.size()) + " Dedekind-A fixtures pass" + witness);
}

Outcome rho_bijection() {
  Checker check;
  std::size_t members = 0, passed = 0;
  for (const auto& name : fixtures_with_transitive_subgroup()) {
    const auto ctx = load_fixture(name);
    const auto a = oracle::raw_elements(*ctx.transitive_subgroup());
    const auto h = oracle::raw_elements(ctx.stabilizer());
    const auto g_order = ctx.group().order();
    for (const auto& u : ctx.lattice()) {
      ++members;
      const auto ru = oracle::raw_elements(u);
      const auto image = oracle::intersect(ru, a);
      bool ok = oracle::raw_elements(rho_restrict(ctx, u)) == image;
      ok = ok && oracle::product(image, h) == ru && oracle::product(h, image) == ru;
      ok = ok && rho_inverse(ctx, rho_restrict(ctx, u)) == u;
      ok = ok && g_order / ru.size() == a.size() / image.size();
      for (const auto& v : ctx.lattice()) {
        const auto rv = oracle::intersect(oracle::raw_elements(v), a);
        ok = ok && oracle::intersect(oracle::join(ru, oracle::raw_elements(v), u.degree()), a) ==
                       oracle::join(image, rv, u.degree());
        ok = ok && oracle::intersect(oracle::intersect(ru, oracle::raw_elements(v)), a) == oracle::intersect(image, rv);
      }
      passed += ok;
      check.expect(ok, name + " member fails the ρ laws");
    }
    check.expect(verify_rho_bijection(ctx).status == Status::pass, name + " verify_rho_bijection");
  }
  return check.outcome(std::to_string(passed) + "/" + std::to_string(members) + " lattice members (100%)");
}

// Decompositions as strings, for set comparison.
std::set<std::string> decomposition_keys(const std::vector<std::vector<Poly>>& ds) {
  std::set<std::string> out;
  for (const auto& d : ds) {
    std::string k;
    for (const auto& p : d) k += p.to_string() + " | ";
    out.insert(k);
  }
  return out;
}

std::vector<std::uint32_t> oracle_primes(const Poly& f) {
  std::vector<std::uint32_t> out;
  const auto n = static_cast<std::uint32_t>(f.degree());
  for (std::uint32_t p : {5u, 7u, 11u}) {
    if (n % p == 0 || std::pow(static_cast<double>(p), n / 2.0 - 1) > 200000) continue;
    const auto r = oracle::reduce_mod(f, Field::prime(p));
    if (r && r->degree() == f.degree()) out.push_back(p);
  }
  return out;
}

Outcome polynomial_engine() {
  Checker check;
  std::size_t checked = 0;
  for (const auto& entry : polynomial_catalog()) {
    const auto f = parse_poly_file(entry.text);
    const auto& field = f.field();
    if (f.degree() > 12 || (field.is_finite() && f.degree() % field.characteristic() == 0)) continue;
    ++checked;
    const auto decs = all_complete_decompositions(f);
    std::vector<std::vector<Poly>> lists;
    for (const auto& d : decs) {
      check.expect(d.composite() == f, entry.name + " composite mismatch");
      lists.push_back(d.factors);
    }
    if (field.is_finite()) {
      check.expect(decomposition_keys(lists) == decomposition_keys(oracle::complete_decompositions(f)),
                   entry.name + " decompositions differ from oracle");
      check.expect(canonical_right_factors(f) == oracle::right_factors(oracle::normalized(f)),
                   entry.name + " right factors differ from oracle");
      continue;
    }
    // Over ℚ: reductions must be oracle decompositions at every good prime,
    // and the sets must coincide at one of them at least.
    bool equal_somewhere = false;
    for (auto p : oracle_primes(f)) {
      const auto fp = Field::prime(p);
      std::vector<std::vector<Poly>> reduced;
      for (const auto& l : lists) {
        std::vector<Poly> r;
        for (const auto& x : l) r.push_back(*oracle::reduce_mod(x, fp));
        reduced.push_back(r);
      }
      const auto want = decomposition_keys(oracle::complete_decompositions(*oracle::reduce_mod(f, fp)));
      const auto have = decomposition_keys(reduced);
      check.expect(std::includes(want.begin(), want.end(), have.begin(), have.end()),
                   entry.name + " mod " + std::to_string(p) + " not an oracle decomposition");
      std::set<std::string> rf_have, rf_want;
      for (const auto& h : canonical_right_factors(f)) rf_have.insert(oracle::reduce_mod(h, fp)->to_string());
      for (const auto& h : oracle::right_factors(oracle::normalized(*oracle::reduce_mod(f, fp)))) rf_want.insert(h.to_string());
      check.expect(std::includes(rf_want.begin(), rf_want.end(), rf_have.begin(), rf_have.end()),
                   entry.name + " mod " + std::to_string(p) + " right factor not found by oracle");
      equal_somewhere = equal_somewhere || (want == have && rf_want == rf_have);
    }
    check.expect(equal_somewhere, entry.name + " never matches the oracle exactly");
  }

  const auto q = Field::rationals();
  const auto x6 = all_complete_decompositions(power(q, 6));
  check.expect(x6.size() == 2, "X^6 does not have 2 decompositions");
  for (const auto& d : x6) {
    std::multiset<int> deg_set;
    std::multiset<std::size_t> auts;
    for (const auto& p : d.factors) {
      deg_set.insert(p.degree());
      auts.insert(aut_group(p).size());
    }
    check.expect(deg_set == std::multiset<int>{2, 3}, "X^6 degree multiset");
    check.expect(auts == std::multiset<std::size_t>{1, 2}, "X^6 Aut-order multiset");
  }
  const auto one = Scalar::one(q);
  const auto d6 = dickson(q, 6, one);
  check.expect(d6 == compose(dickson(q, 2, one), dickson(q, 3, one)), "D6 != D2∘D3");
  check.expect(d6 == compose(dickson(q, 3, one), dickson(q, 2, one)), "D6 != D3∘D2");
  check.expect(d6 == Poly::from_ints(q, {-2, 0, 9, 0, -6, 0, 1}), "D6 coefficients");
  return check.outcome(std::to_string(checked) + " corpus polynomials match the oracle; X^6 and Dickson checks hold");
}

std::vector<SkewPoly> all_skew(const Field& f, std::size_t max_degree) {
  const auto elems = field_elements(f);
  std::vector<SkewPoly> out;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::vector<std::size_t> digits(d + 1, 0);
    digits[d] = 1;
    while (true) {
      std::vector<Scalar> c;
      for (auto i : digits) c.push_back(elems[i]);
      out.emplace_back(f, c);
      std::size_t i = 0;
      while (i <= d && ++digits[i] == elems.size()) {
        digits[i] = i == d ? 1 : 0;
        ++i;
      }
      if (i > d) break;
    }
  }
  return out;
}

Outcome additive_ore() {
  Checker check;
  const auto f2 = Field::prime(2);
  const auto a = all_complete_skew_factorizations(SkewPoly::from_ints(f2, {0, 1, 1}));
  check.expect(a.size() == 2, "tau^2+tau does not have 2 factorizations");
  for (const auto& fac : a) check.expect(fac.size() == 2 && fac[0].degree() == 1 && fac[1].degree() == 1, "tau^2+tau shape");
  const auto irr = SkewPoly::from_ints(f2, {1, 1, 1});
  check.expect(is_irreducible(irr) && all_complete_skew_factorizations(irr).size() == 1, "tau^2+tau+1 not irreducible");
  check.expect(to_additive(irr) == Poly::from_ints(f2, {0, 1, 1, 0, 1}), "additive form of tau^2+tau+1");
  check.expect(oracle::right_factors(to_additive(irr)).empty(), "oracle finds a right factor of X^4+X^2+X");

  std::size_t swept = 0;
  for (const auto& field : {Field::prime(2), Field::gf4()}) {
    for (const auto& f : all_skew(field, 3)) {
      ++swept;
      const auto name = field.name() + " " + f.to_string();
      check.expect(verify_ore_invariance(f).status == Status::pass, name + " verify_ore_invariance");
      const auto want = oracle::skew_factorizations(f.coeffs());
      std::vector<std::vector<std::vector<Scalar>>> got;
      for (const auto& fac : all_complete_skew_factorizations(f)) {
        std::vector<std::vector<Scalar>> row;
        for (const auto& p : fac) row.push_back(p.coeffs());
        got.push_back(row);
      }
      std::sort(got.begin(), got.end());
      check.expect(got == want, name + " factorizations differ from oracle");
      // Ore invariance on the oracle's own factorizations.
      std::set<std::multiset<std::size_t>> shapes;
      for (const auto& fac : want) {
        std::multiset<std::size_t> s;
        for (const auto& p : fac) s.insert(p.size() - 1);
        shapes.insert(s);
      }
      check.expect(shapes.size() == 1, name + " oracle factorizations disagree in shape");
    }
  }
  return check.outcome(std::to_string(swept) + " skew polynomials over F2 and F4 swept");
}

Outcome laurent_suite() {
  Checker check;
  const auto f7 = Field::prime(7);
  const std::vector<std::pair<std::string, Poly>> cases{{"X^3", Poly::from_ints(f7, {0, 0, 0, 1})},
                                                        {"X^3+X", Poly::from_ints(f7, {0, 1, 0, 1})}};
  for (const auto& [name, f] : cases) {
    const auto cyc = monodromy_at_infinity(f, 10);
    check.expect(cyc.permutation.cycle_type() == std::vector<std::size_t>{3}, name + " not a 3-cycle");
    for (const auto& b : cyc.branches) {
      check.expect(verify_branch(f, b), name + " verify_branch");
      std::vector<Scalar> x{b.c};
      x.insert(x.end(), b.tail.begin(), b.tail.end());
      const auto r = oracle::laurent_residuals(f, x);
      check.expect(r.size() == 11 && std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); }),
                   name + " oracle residuals nonzero");
      const auto hi = solve_branch(f, b.c, 20);
      check.expect(std::equal(b.tail.begin(), b.tail.end(), hi.tail.begin()), name + " unstable from 10 to 20");
      const auto x20 = [&] {
        std::vector<Scalar> v{hi.c};
        v.insert(v.end(), hi.tail.begin(), hi.tail.end());
        return v;
      }();
      const auto r20 = oracle::laurent_residuals(f, x20);
      check.expect(std::all_of(r20.begin(), r20.end(), [](const Scalar& s) { return s.is_zero(); }),
                   name + " oracle residuals nonzero at precision 20");
    }
  }
  return check.outcome("X^3 and X^3+X over F7: residuals vanish, 3-cycles, stable 10 -> 20");
}

Outcome determinism() {
  Checker check;
  const auto a = run_cli("fixtures run-all");
  const auto b = run_cli("fixtures run-all");
  check.expect(a.exit_code == 0, "run-all exit code " + std::to_string(a.exit_code));
  check.expect(!a.out.empty(), "run-all printed nothing");
  check.expect(a.out == b.out, "run-all outputs differ");
  const auto ja = run_cli("fixtures run-all --json");
  const auto jb = run_cli("fixtures run-all --json");
  check.expect(ja.out == jb.out, "run-all --json outputs differ");
  std::size_t items = 0;
  for (const auto& j : json_lines(ja.out)) {
    ++items;
    check.expect(j.contains("context") && j.contains("theorem") && j.contains("status") && j.contains("details"),
                 "JSON line missing a field");
  }
  return check.outcome("two runs byte-identical (" + std::to_string(a.out.size()) + " bytes, " + std::to_string(items) +
                       " JSON items)");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
    double limit_seconds;
  };
  const std::vector<Criterion> criteria{
      {1, "counterexample", counterexample_cli, 10.0},
      {2, "ritt-first", ritt_first, 60.0},
      {3, "monodromy-invariant", monodromy_invariant, 0.0},
      {4, "aut-and-divisibility", aut_and_divisibility, 0.0},
      {5, "rho-bijection", rho_bijection, 0.0},
      {6, "polynomial-engine", polynomial_engine, 0.0},
      {7, "additive-ore", additive_ore, 120.0},
      {8, "laurent", laurent_suite, 0.0},
      {9, "determinism", determinism, 0.0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o = {false, o.note + " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)"};
    }
    failed += !o.ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << "  [" << timing << "]  " << o.note << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
