#include "rittlab/chains.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "rittlab/error.hpp"
#include "rittlab/small_groups.hpp"

namespace rittlab {

using nlohmann::json;

ChainContext ChainContext::build(std::string name, PermutationGroup g, PermutationGroup h,
                                 std::optional<PermutationGroup> a, std::size_t lattice_cap) {
  if (!is_transitive(g)) throw InvalidContext("group is not transitive");
  if (h.degree() != g.degree() || !g.contains(h)) {
    throw InvalidContext("H is not a subgroup of G");
  }
  bool fixes_point = false;
  for (Point pt = 0; pt < g.degree() && !fixes_point; ++pt) {
    fixes_point = std::all_of(h.generators().begin(), h.generators().end(),
                              [pt](const Permutation& x) { return x(pt) == pt; });
  }
  if (!fixes_point || h.order() * g.degree() != g.order()) {
    throw InvalidContext("H is not a one-point stabilizer of G");
  }
  if (!core_in(g, h).is_trivial()) throw InvalidContext("G does not act faithfully on G/H");
  if (a) {
    if (a->degree() != g.degree() || !g.contains(*a)) {
      throw InvalidContext("A is not a subgroup of G");
    }
    if (!is_transitive(*a)) throw InvalidContext("A is not transitive");
  }

  ChainContext ctx;
  ctx.name_ = std::move(name);
  ctx.a_ = std::move(a);
  ctx.lattice_ = intermediate_subgroups(g, h, lattice_cap);
  const std::size_t n = ctx.lattice_.size();
  ctx.contains_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& big = ctx.lattice_[i];
      const auto& small = ctx.lattice_[j];
      ctx.contains_[i][j] = big.order() % small.order() == 0 && big.contains(small);
    }
  }
  ctx.covers_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !ctx.contains_[i][j]) continue;
      bool maximal = true;
      for (std::size_t k = 0; k < n && maximal; ++k) {
        if (k != i && k != j && ctx.contains_[i][k] && ctx.contains_[k][j]) maximal = false;
      }
      if (maximal) ctx.covers_[i].push_back(j);
    }
  }
  return ctx;
}

ChainContext ChainContext::from_spec(const ContextSpec& spec, std::size_t lattice_cap) {
  auto g = PermutationGroup::close(spec.degree, spec.generators);
  PermutationGroup h = PermutationGroup::trivial(spec.degree);
  if (spec.h_stabilizer_point) {
    if (*spec.h_stabilizer_point >= spec.degree) throw InvalidContext("stabilizer point out of range");
    h = point_stabilizer(g, *spec.h_stabilizer_point);
  } else if (!spec.h_generators.empty()) {
    h = PermutationGroup::close(spec.degree, spec.h_generators);
  } else {
    h = point_stabilizer(g, 0);
  }
  std::optional<PermutationGroup> a;
  if (spec.a_generators) a = PermutationGroup::close(spec.degree, *spec.a_generators);
  return build(spec.name, std::move(g), std::move(h), std::move(a), lattice_cap);
}

std::optional<std::size_t> ChainContext::find(const PermutationGroup& u) const {
  auto it = std::lower_bound(lattice_.begin(), lattice_.end(), u,
                             [](const PermutationGroup& x, const PermutationGroup& y) {
                               if (x.order() != y.order()) return x.order() < y.order();
                               return x.elements() < y.elements();
                             });
  if (it == lattice_.end() || !(*it == u)) return std::nullopt;
  return static_cast<std::size_t>(it - lattice_.begin());
}

std::size_t ChainContext::meet(std::size_t i, std::size_t j) const {
  auto idx = find(intersection(lattice_[i], lattice_[j]));
  if (!idx) throw InternalInconsistency("intersection of lattice members left the lattice");
  return *idx;
}

std::size_t ChainContext::join(std::size_t i, std::size_t j) const {
  // The lattice is sorted by order, so the first common upper bound is the join.
  for (std::size_t k = 0; k < lattice_.size(); ++k) {
    if (contains_[k][i] && contains_[k][j]) return k;
  }
  throw InternalInconsistency("lattice has no top");
}

Chain make_chain(const ChainContext& ctx, std::vector<std::size_t> members) {
  if (members.empty() || members.front() != ctx.top() || members.back() != ctx.bottom()) {
    throw InvalidArgument("chain must run from G down to H");
  }
  Chain c;
  c.maximal = true;
  for (std::size_t k = 0; k + 1 < members.size(); ++k) {
    const std::size_t upper = members[k];
    const std::size_t lower = members[k + 1];
    if (upper >= ctx.lattice().size() || lower >= ctx.lattice().size() || upper == lower ||
        !ctx.contains(upper, lower)) {
      throw InvalidArgument("chain is not strictly decreasing");
    }
    const auto& covers = ctx.maximal_below(upper);
    if (std::find(covers.begin(), covers.end(), lower) == covers.end()) c.maximal = false;
  }
  if (members.size() == 1 && ctx.top() != ctx.bottom()) {
    throw InvalidArgument("chain must run from G down to H");
  }
  c.members = std::move(members);
  return c;
}

std::vector<std::size_t> chain_indices(const ChainContext& ctx, const Chain& chain) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k + 1 < chain.members.size(); ++k) {
    out.push_back(ctx.member(chain.members[k]).order() / ctx.member(chain.members[k + 1]).order());
  }
  return out;
}

std::string describe_chain(const ChainContext& ctx, const Chain& chain) {
  std::ostringstream os;
  for (std::size_t k = 0; k < chain.members.size(); ++k) {
    if (k) os << " > ";
    os << ctx.member(chain.members[k]).order();
  }
  return os.str();
}

namespace {

const PermutationGroup& require_a(const ChainContext& ctx) {
  if (!ctx.transitive_subgroup()) throw HypothesisFailed("context has no transitive subgroup A");
  return *ctx.transitive_subgroup();
}

json chain_json(const ChainContext& ctx, const Chain& c) {
  std::vector<std::size_t> orders;
  for (auto m : c.members) orders.push_back(ctx.member(m).order());
  return json{{"members", c.members}, {"orders", orders}, {"indices", chain_indices(ctx, c)}};
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool divides(std::size_t a, std::size_t b) { return a != 0 && b % a == 0; }

}  // namespace

PermutationGroup rho_restrict(const ChainContext& ctx, const PermutationGroup& u) {
  const auto& a = require_a(ctx);
  if (!ctx.group().contains(u) || !u.contains(ctx.stabilizer())) {
    throw InvalidArgument("U does not lie between H and G");
  }
  auto j = intersection(u, a);
  if (!set_product(j, ctx.stabilizer()).is_subgroup) {
    throw InternalInconsistency("U ∩ A does not permute with H");
  }
  return j;
}

PermutationGroup rho_inverse(const ChainContext& ctx, const PermutationGroup& j) {
  const auto& a = require_a(ctx);
  const auto& h = ctx.stabilizer();
  if (!a.contains(j) || !j.contains(intersection(h, a))) {
    throw InvalidArgument("J does not lie between H ∩ A and A");
  }
  auto prod = set_product(j, h);
  if (!prod.is_subgroup) throw NotPermutable("JH is not a group");
  return PermutationGroup::from_elements(h.degree(), std::move(prod.elements));
}

std::vector<Chain> maximal_chains(const ChainContext& ctx) {
  std::vector<Chain> out;
  std::vector<std::size_t> path{ctx.top()};
  std::function<void(std::size_t)> descend = [&](std::size_t v) {
    if (v == ctx.bottom()) {
      out.push_back(Chain{path, true});
      return;
    }
    for (std::size_t w : ctx.maximal_below(v)) {
      path.push_back(w);
      descend(w);
      path.pop_back();
    }
  };
  descend(ctx.top());
  return out;
}

bool satisfies_weak_permutability(const ChainContext& ctx) {
  const auto& a = require_a(ctx);
  std::vector<PermutationGroup> images;
  for (const auto& u : ctx.lattice()) images.push_back(intersection(u, a));
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (!set_product(images[i], images[j]).is_subgroup) return false;
    }
  }
  return true;
}

namespace {

void check_hypothesis(const ChainContext& ctx, Hypothesis hypothesis) {
  const auto& a = require_a(ctx);
  if (hypothesis == Hypothesis::quasi_hamiltonian) {
    if (!is_quasi_hamiltonian(a)) throw HypothesisFailed("A is not quasi-Hamiltonian");
  } else if (!satisfies_weak_permutability(ctx)) {
    throw HypothesisFailed("subgroups of A permuting with H do not permute with each other");
  }
}

// First maximal chain from `from` down to H, following maximal_below().
std::vector<std::size_t> descend_first(const ChainContext& ctx, std::size_t from) {
  std::vector<std::size_t> out{from};
  while (out.back() != ctx.bottom()) {
    std::size_t next = ctx.bottom();
    for (std::size_t w : ctx.maximal_below(out.back())) {
      if (ctx.contains(w, ctx.bottom())) {
        next = w;
        break;
      }
    }
    out.push_back(next);
  }
  return out;
}

using Members = std::vector<std::size_t>;

std::vector<Members> walk(const ChainContext& ctx, const Members& v, const Members& w) {
  if (v == w) return {v};
  const std::size_t top = v.front();
  auto prepend = [top](std::vector<Members> tails) {
    for (auto& t : tails) t.insert(t.begin(), top);
    return tails;
  };
  const Members v_tail(v.begin() + 1, v.end());
  const Members w_tail(w.begin() + 1, w.end());
  if (v[1] == w[1]) return prepend(walk(ctx, v_tail, w_tail));

  const std::size_t x = ctx.meet(v[1], w[1]);
  const auto& gv = ctx.member(v[1]);
  const auto& gw = ctx.member(w[1]);
  const auto& gx = ctx.member(x);
  const auto& gt = ctx.member(top);
  if (gv.order() * gw.order() != gt.order() * gx.order()) {
    throw TheoremViolated("product of the two top steps is not the whole group",
                          json{{"top_order", gt.order()},
                               {"v_order", gv.order()},
                               {"w_order", gw.order()},
                               {"meet_order", gx.order()}});
  }
  auto covers_v = ctx.maximal_below(v[1]);
  auto covers_w = ctx.maximal_below(w[1]);
  if (std::find(covers_v.begin(), covers_v.end(), x) == covers_v.end() ||
      std::find(covers_w.begin(), covers_w.end(), x) == covers_w.end()) {
    throw TheoremViolated("meet of the top steps is not maximal in both",
                          json{{"v_order", gv.order()}, {"w_order", gw.order()},
                               {"meet_order", gx.order()}});
  }

  Members below = descend_first(ctx, x);
  Members mid_v{v[1]};
  Members mid_w{w[1]};
  mid_v.insert(mid_v.end(), below.begin(), below.end());
  mid_w.insert(mid_w.end(), below.begin(), below.end());

  auto first = prepend(walk(ctx, v_tail, mid_v));
  auto second = prepend(walk(ctx, w_tail, mid_w));
  std::reverse(second.begin(), second.end());
  first.insert(first.end(), second.begin(), second.end());
  return first;
}

}  // namespace

ExchangeWalk exchange_walk(const ChainContext& ctx, const Chain& from, const Chain& to,
                           Hypothesis hypothesis) {
  check_hypothesis(ctx, hypothesis);
  for (const Chain* c : {&from, &to}) {
    if (!make_chain(ctx, c->members).maximal) throw NotMaximal("chain is not maximal");
  }
  ExchangeWalk out;
  for (auto& members : walk(ctx, from.members, to.members)) {
    out.chains.push_back(make_chain(ctx, std::move(members)));
  }
  for (std::size_t k = 0; k + 1 < out.chains.size(); ++k) {
    if (auto why = check_exchange_step(ctx, out.chains[k], out.chains[k + 1])) {
      throw TheoremViolated("exchange step is invalid: " + *why,
                            json{{"from", chain_json(ctx, out.chains[k])},
                                 {"to", chain_json(ctx, out.chains[k + 1])}});
    }
  }
  return out;
}

std::optional<std::string> check_exchange_step(const ChainContext& ctx, const Chain& prev,
                                               const Chain& next) {
  if (prev.members.size() != next.members.size()) return "chains differ in length";
  if (!prev.maximal || !next.maximal) return "chain is not maximal";
  std::vector<std::size_t> diff;
  for (std::size_t k = 0; k < prev.members.size(); ++k) {
    if (prev.members[k] != next.members[k]) diff.push_back(k);
  }
  if (diff.size() != 1) return "chains differ in " + std::to_string(diff.size()) + " entries";
  const std::size_t k = diff.front();
  if (k == 0 || k + 1 == prev.members.size()) return "an endpoint changed";
  // Top-down indices; the step swaps the two indices around position k.
  auto a = chain_indices(ctx, prev);
  auto b = chain_indices(ctx, next);
  std::swap(a[k - 1], a[k]);
  if (a != b) return "indices around the exchanged entry are not swapped";
  return std::nullopt;
}

PermutationGroup normalizer_quotient(const PermutationGroup& g, const PermutationGroup& u) {
  return coset_action(normalizer_in(g, u), u).image;
}

ChainInvariants chain_invariants(const ChainContext& ctx, const Chain& chain) {
  ChainInvariants inv;
  inv.indices = chain_indices(ctx, chain);
  for (std::size_t k = 0; k + 1 < chain.members.size(); ++k) {
    const auto& upper = ctx.member(chain.members[k]);
    const auto& lower = ctx.member(chain.members[k + 1]);
    inv.monodromy_quotients.push_back(coset_action(upper, lower).image);
    auto q = normalizer_quotient(upper, lower);
    inv.aut_quotients.push_back(AutQuotient{q.order(), group_type_label(q)});
  }
  return inv;
}

TheoremReport verify_ritt_first(const ChainContext& ctx, Hypothesis hypothesis) {
  check_hypothesis(ctx, hypothesis);
  const auto chains = maximal_chains(ctx);
  const auto expected = sorted(chain_indices(ctx, chains.front()));
  json listed = json::array();
  for (const auto& c : chains) {
    listed.push_back(chain_json(ctx, c));
    if (sorted(chain_indices(ctx, c)) != expected) {
      throw TheoremViolated("maximal chains with different index multisets",
                            json{{"first", chain_json(ctx, chains.front())},
                                 {"second", chain_json(ctx, c)}});
    }
  }
  std::size_t walks = 0;
  std::size_t max_steps = 0;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    for (std::size_t j = 0; j < chains.size(); ++j) {
      if (i == j) continue;
      auto w = exchange_walk(ctx, chains[i], chains[j], hypothesis);
      if (!(w.chains.front() == chains[i]) || !(w.chains.back() == chains[j])) {
        throw InternalInconsistency("exchange walk has wrong endpoints");
      }
      for (const auto& c : w.chains) {
        if (sorted(chain_indices(ctx, c)) != expected) {
          throw TheoremViolated("exchange walk changed the index multiset", chain_json(ctx, c));
        }
      }
      ++walks;
      max_steps = std::max(max_steps, w.steps());
    }
  }
  TheoremReport r;
  r.theorem = "ritt1";
  std::ostringstream os;
  os << chains.size() << " maximal chains, indices {";
  for (std::size_t k = 0; k < expected.size(); ++k) os << (k ? "," : "") << expected[k];
  os << "}";
  r.summary = os.str();
  r.details = json{{"chains", listed},
                   {"index_multiset", expected},
                   {"walks", walks},
                   {"max_walk_steps", max_steps},
                   {"hypothesis", hypothesis == Hypothesis::quasi_hamiltonian
                                      ? "quasi-hamiltonian"
                                      : "weak-permutability"}};
  return r;
}

namespace {

// Permutation-isomorphism classes, numbered in order of first appearance.
class IsoClasses {
 public:
  std::size_t id(const PermutationGroup& g) {
    for (std::size_t k = 0; k < reps_.size(); ++k) {
      if (perm_isomorphic(reps_[k], g)) return k;
    }
    reps_.push_back(g);
    return reps_.size() - 1;
  }

 private:
  std::vector<PermutationGroup> reps_;
};

std::string quotient_label(const PermutationGroup& g) {
  return group_type_label(g) + " on " + std::to_string(g.degree());
}

std::vector<Chain> length_two_chains(const std::vector<Chain>& chains) {
  std::vector<Chain> out;
  for (const auto& c : chains) {
    if (c.length() == 2) out.push_back(c);
  }
  return out;
}

}  // namespace

TheoremReport verify_monodromy_invariant(const ChainContext& ctx) {
  const auto& a = require_a(ctx);
  if (!is_dedekind(a)) throw HypothesisFailed("A is not a Dedekind group");
  const auto chains = maximal_chains(ctx);
  IsoClasses classes;
  std::optional<std::vector<std::size_t>> expected;
  json listed = json::array();
  for (const auto& c : chains) {
    auto inv = chain_invariants(ctx, c);
    std::vector<std::size_t> ids;
    json labels = json::array();
    for (const auto& q : inv.monodromy_quotients) {
      ids.push_back(classes.id(q));
      labels.push_back(quotient_label(q));
    }
    auto entry = chain_json(ctx, c);
    entry["monodromy"] = labels;
    listed.push_back(entry);
    ids = sorted(ids);
    if (!expected) {
      expected = ids;
    } else if (ids != *expected) {
      throw TheoremViolated("monodromy quotients differ between maximal chains",
                            json{{"chains", listed}});
    }
  }

  std::size_t cross_checks = 0;
  const auto pairs = length_two_chains(chains);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const auto& g = ctx.group();
      const auto& h = ctx.stabilizer();
      const auto& u = ctx.member(pairs[i].members[1]);
      const auto& v = ctx.member(pairs[j].members[1]);
      bool top_bottom = perm_isomorphic(coset_action(g, u).image, coset_action(v, h).image);
      bool bottom_top = perm_isomorphic(coset_action(u, h).image, coset_action(g, v).image);
      if (!top_bottom || !bottom_top) {
        throw TheoremViolated("length-two chains are not crosswise isomorphic",
                              json{{"first", chain_json(ctx, pairs[i])},
                                   {"second", chain_json(ctx, pairs[j])}});
      }
      ++cross_checks;
    }
  }

  TheoremReport r;
  r.theorem = "mon";
  r.summary = std::to_string(chains.size()) + " maximal chains, quotient classes agree";
  r.details = json{{"chains", listed}, {"cross_checks", cross_checks}};
  return r;
}

TheoremReport scan_monodromy_dichotomy(const ChainContext& ctx) {
  const auto& a = require_a(ctx);
  if (!is_quasi_hamiltonian(a)) throw HypothesisFailed("A is not quasi-Hamiltonian");
  const auto pairs = length_two_chains(maximal_chains(ctx));
  const auto& g = ctx.group();
  const auto& h = ctx.stabilizer();
  const auto core_h = core_in(g, h);
  std::size_t isomorphic = 0;
  json trivial_cores = json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (i == j) continue;
      const auto& u = ctx.member(pairs[i].members[1]);
      const auto& v = ctx.member(pairs[j].members[1]);
      const auto n = core_in(g, u);
      const auto c = core_in(v, h);
      if (perm_isomorphic(coset_action(g, u).image, coset_action(v, h).image)) {
        ++isomorphic;
      } else if (n == c && c == core_h) {
        trivial_cores.push_back(json{{"u_order", u.order()}, {"v_order", v.order()}});
      } else {
        throw TheoremViolated("neither G/N ≅ V/C nor N = C = core(H)",
                              json{{"u_order", u.order()},
                                   {"v_order", v.order()},
                                   {"n_order", n.order()},
                                   {"c_order", c.order()}});
      }
    }
  }
  TheoremReport r;
  r.theorem = "dichotomy";
  r.summary = std::to_string(trivial_cores.size()) + " ordered pairs with N = C = core(H)";
  r.details = json{{"ordered_pairs", pairs.size() * (pairs.size() ? pairs.size() - 1 : 0)},
                   {"isomorphic", isomorphic},
                   {"equal_cores", trivial_cores}};
  return r;
}

TheoremReport verify_aut_invariant(const ChainContext& ctx) {
  const auto& a = require_a(ctx);
  if (!is_quasi_hamiltonian(a)) throw HypothesisFailed("A is not quasi-Hamiltonian");
  using Triple = std::tuple<std::size_t, std::size_t, std::string>;
  std::optional<std::vector<Triple>> expected;
  json listed = json::array();
  for (const auto& c : maximal_chains(ctx)) {
    auto inv = chain_invariants(ctx, c);
    std::vector<Triple> triples;
    json aut = json::array();
    for (std::size_t k = 0; k < inv.indices.size(); ++k) {
      triples.emplace_back(inv.indices[k], inv.aut_quotients[k].order, inv.aut_quotients[k].type);
      aut.push_back(json{{"order", inv.aut_quotients[k].order}, {"type", inv.aut_quotients[k].type}});
    }
    auto entry = chain_json(ctx, c);
    entry["aut"] = aut;
    listed.push_back(entry);
    std::sort(triples.begin(), triples.end());
    if (!expected) {
      expected = triples;
    } else if (triples != *expected) {
      throw TheoremViolated("automorphism quotients differ between maximal chains",
                            json{{"chains", listed}});
    }
  }

  // Every maximal proper subgroup of a quasi-Hamiltonian group is normal.
  // Only checked where the subgroup lattice of A is small enough to list.
  json ore = "skipped";
  constexpr std::size_t kOreLimit = 256;
  if (a.order() <= kOreLimit) {
    auto subs = intermediate_subgroups(a, PermutationGroup::trivial(a.degree()));
    std::size_t maximal = 0;
    for (std::size_t i = 0; i + 1 < subs.size(); ++i) {
      bool is_max = true;
      for (std::size_t j = i + 1; j + 1 < subs.size() && is_max; ++j) {
        if (subs[j].order() > subs[i].order() && subs[j].contains(subs[i])) is_max = false;
      }
      if (!is_max) continue;
      ++maximal;
      if (!is_normal_in(a, subs[i])) {
        throw TheoremViolated("maximal subgroup of A is not normal",
                              json{{"order", subs[i].order()}});
      }
    }
    ore = json{{"maximal_subgroups", maximal}, {"all_normal", true}};
  }

  TheoremReport r;
  r.theorem = "aut";
  r.summary = std::to_string(listed.size()) + " maximal chains, (index, Aut) multisets agree";
  r.details = json{{"chains", listed}, {"maximal_subgroups_of_a", ore}};
  return r;
}

TheoremReport verify_divisibility(const ChainContext& ctx, const Chain& chain) {
  const auto& a = require_a(ctx);
  if (!is_dedekind(a)) throw HypothesisFailed("A is not a Dedekind group");
  const auto& h = ctx.stabilizer();
  // Bottom-up: B_0 = H < B_1 < ... < B_n = G.
  std::vector<std::size_t> up(chain.members.rbegin(), chain.members.rend());
  json steps = json::array();
  std::size_t product = 1;
  for (std::size_t i = 0; i + 1 < up.size(); ++i) {
    const auto& lower = ctx.member(up[i]);
    const auto& upper = ctx.member(up[i + 1]);
    const auto p = normalizer_in(upper, h);
    const auto q = normalizer_in(lower, h);
    const auto n_step = normalizer_in(upper, lower);
    const std::size_t aut_step = n_step.order() / lower.order();
    product *= aut_step;
    json witness{{"step", i}, {"lower_order", lower.order()}, {"upper_order", upper.order()}};
    if (!is_normal_in(p, q)) {
      throw TheoremViolated("Aut of the lower cover is not normal in the next one", witness);
    }
    if (!n_step.contains(p)) {
      throw TheoremViolated("N(H) in the upper group does not normalize the lower group", witness);
    }
    if (!divides(p.order() / q.order(), aut_step)) {
      throw TheoremViolated("quotient of Aut orders does not divide the step Aut", witness);
    }
    steps.push_back(json{{"aut_lower", q.order() / h.order()},
                         {"aut_upper", p.order() / h.order()},
                         {"aut_step", aut_step}});
  }
  const std::size_t aut_total = normalizer_in(ctx.group(), h).order() / h.order();
  if (!divides(aut_total, product)) {
    throw TheoremViolated("|Aut| does not divide the product over the chain",
                          json{{"aut", aut_total}, {"product", product}, {"chain", chain_json(ctx, chain)}});
  }
  TheoremReport r;
  r.theorem = "div";
  r.summary = std::to_string(aut_total) + " divides " + std::to_string(product);
  r.details = json{{"chain", chain_json(ctx, chain)},
                   {"aut", aut_total},
                   {"product", product},
                   {"steps", steps}};
  return r;
}

TheoremReport verify_divisibility_all(const ChainContext& ctx) {
  json per_chain = json::array();
  std::string summary;
  for (const auto& c : maximal_chains(ctx)) {
    auto r = verify_divisibility(ctx, c);
    if (summary.empty()) summary = r.summary;
    per_chain.push_back(r.details);
  }
  TheoremReport r;
  r.theorem = "div";
  r.summary = summary + " on " + std::to_string(per_chain.size()) + " chains";
  r.details = json{{"chains", per_chain}};
  return r;
}

TheoremReport verify_indecomposable_equivalences(const ChainContext& ctx) {
  if (ctx.lattice().size() != 2) {
    throw NotIndecomposable("lattice has " + std::to_string(ctx.lattice().size()) +
                            " members, expected exactly G and H");
  }
  const auto& g = ctx.group();
  const auto& h = ctx.stabilizer();
  const std::size_t n = g.degree();
  const std::size_t aut = normalizer_in(g, h).order() / h.order();
  bool prime = n >= 2;
  for (std::size_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
  const bool c1 = prime && g.order() == n && aut == n;
  const bool c2 = is_abelian(g);
  const bool c3 = g.order() == n;
  const bool c4 = aut > 1;
  json details{{"degree", n},
               {"prime_cyclic", c1},
               {"abelian", c2},
               {"regular", c3},
               {"nontrivial_aut", c4},
               {"aut_order", aut}};
  if (!(c1 == c2 && c2 == c3 && c3 == c4)) {
    throw TheoremViolated("indecomposable characterizations disagree", details);
  }
  TheoremReport r;
  r.theorem = "indec";
  r.summary = std::string("all four conditions ") + (c1 ? "hold" : "fail");
  r.details = details;
  return r;
}

TheoremReport verify_rho_bijection(const ChainContext& ctx) {
  const auto& a = require_a(ctx);
  const auto& g = ctx.group();
  const auto& h = ctx.stabilizer();
  std::vector<PermutationGroup> images;
  for (const auto& u : ctx.lattice()) {
    auto j = rho_restrict(ctx, u);
    json witness{{"u_order", u.order()}, {"j_order", j.order()}};
    if (!(rho_inverse(ctx, j) == u)) throw TheoremViolated("ρ⁻¹(ρ(U)) ≠ U", witness);
    if (index_of(g, u) != index_of(a, j)) throw TheoremViolated("[G:U] ≠ [A:ρ(U)]", witness);
    images.push_back(std::move(j));
  }
  const std::size_t n = ctx.lattice().size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      json witness{{"u_order", ctx.member(i).order()}, {"v_order", ctx.member(k).order()}};
      if (!(images[ctx.meet(i, k)] == intersection(images[i], images[k]))) {
        throw TheoremViolated("ρ(U∩V) ≠ ρU ∩ ρV", witness);
      }
      if (!(images[ctx.join(i, k)] == join(images[i], images[k]))) {
        throw TheoremViolated("ρ⟨U,V⟩ ≠ ⟨ρU,ρV⟩", witness);
      }
    }
  }
  // Surjectivity: every J between H∩A and A that permutes with H is an image.
  std::size_t permuting = 0;
  for (const auto& j : intermediate_subgroups(a, intersection(h, a))) {
    if (!set_product(j, h).is_subgroup) continue;
    ++permuting;
    if (std::find(images.begin(), images.end(), j) == images.end()) {
      throw TheoremViolated("J permuting with H is not in the image of ρ",
                            json{{"j_order", j.order()}});
    }
  }
  TheoremReport r;
  r.theorem = "rho";
  r.summary = std::to_string(n) + " lattice members in bijection";
  r.details = json{{"lattice_size", n}, {"permuting_subgroups_of_a", permuting}};
  return r;
}

TheoremReport witness_nondedekind_failure(const PermutationGroup& g, const PermutationGroup& u) {
  if (!is_transitive(g) || g.order() != g.degree()) throw HypothesisFailed("G is not regular");
  if (!is_quasi_hamiltonian(g)) throw HypothesisFailed("G is not quasi-Hamiltonian");
  if (is_dedekind(g)) throw HypothesisFailed("G is a Dedekind group");
  if (u.degree() != g.degree() || !g.contains(u)) throw InvalidArgument("U is not a subgroup of G");
  if (is_normal_in(g, u)) throw HypothesisFailed("U is normal in G");
  const std::size_t aut_outer = normalizer_in(g, u).order() / u.order();
  json details{{"aut", g.order()},
               {"aut_inner", u.order()},
               {"aut_outer", aut_outer},
               {"product", u.order() * aut_outer}};
  if (divides(g.order(), u.order() * aut_outer)) {
    throw TheoremViolated("|G| divides |U|·|N_G(U)/U| for a non-normal U", details);
  }
  TheoremReport r;
  r.theorem = "nondedekind";
  r.summary = std::to_string(g.order()) + " does not divide " +
              std::to_string(u.order()) + "*" + std::to_string(aut_outer);
  r.details = details;
  return r;
}

std::optional<PermutationGroup> find_nonnormal_subgroup(const PermutationGroup& g) {
  for (const auto& u : intermediate_subgroups(g, PermutationGroup::trivial(g.degree()))) {
    if (!is_normal_in(g, u)) return u;
  }
  return std::nullopt;
}

}  // namespace rittlab
