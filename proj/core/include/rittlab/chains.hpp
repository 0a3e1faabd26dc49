#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rittlab/group_io.hpp"
#include "rittlab/perm_group.hpp"
#include "rittlab/report.hpp"

namespace rittlab {

/// The group-side image of a cover: a transitive faithful permutation group
/// G (the monodromy group), a one-point stabilizer H, and optionally a
/// transitive subgroup A. The lattice of groups between H and G is computed
/// once at construction.
///
/// Lattice members are referred to by their position in lattice(), which is
/// sorted by (order, elements): H is member 0 and G is the last member.
class ChainContext {
 public:
  /// Throws InvalidContext if G is intransitive, H is not a point stabilizer
  /// of G, or A is not a transitive subgroup of G.
  static ChainContext build(std::string name, PermutationGroup g, PermutationGroup h,
                            std::optional<PermutationGroup> a = std::nullopt,
                            std::size_t lattice_cap = kDefaultLatticeCap);

  /// H defaults to the stabilizer of point 0 when the ContextSpec names none.
  static ChainContext from_spec(const ContextSpec& spec,
                                std::size_t lattice_cap = kDefaultLatticeCap);

  const std::string& name() const noexcept { return name_; }
  const PermutationGroup& group() const noexcept { return lattice_.back(); }
  const PermutationGroup& stabilizer() const noexcept { return lattice_.front(); }
  const std::optional<PermutationGroup>& transitive_subgroup() const noexcept { return a_; }

  const std::vector<PermutationGroup>& lattice() const noexcept { return lattice_; }
  const PermutationGroup& member(std::size_t i) const { return lattice_.at(i); }
  std::size_t top() const noexcept { return lattice_.size() - 1; }
  std::size_t bottom() const noexcept { return 0; }

  std::optional<std::size_t> find(const PermutationGroup& u) const;

  /// lattice[j] ≤ lattice[i].
  bool contains(std::size_t i, std::size_t j) const { return contains_[i][j]; }

  /// Members that are maximal among the lattice members strictly inside lattice[i].
  const std::vector<std::size_t>& maximal_below(std::size_t i) const { return covers_[i]; }

  std::size_t meet(std::size_t i, std::size_t j) const;
  std::size_t join(std::size_t i, std::size_t j) const;

 private:
  std::string name_;
  std::optional<PermutationGroup> a_;
  std::vector<PermutationGroup> lattice_;
  std::vector<std::vector<bool>> contains_;
  std::vector<std::vector<std::size_t>> covers_;
};

/// A strictly decreasing sequence of lattice members from G down to H.
struct Chain {
  std::vector<std::size_t> members;
  bool maximal = false;

  std::size_t length() const noexcept { return members.empty() ? 0 : members.size() - 1; }
  friend bool operator==(const Chain& a, const Chain& b) { return a.members == b.members; }
};

/// Validates the members and computes the maximal flag. Throws InvalidArgument
/// if the sequence is not strictly decreasing from G to H.
Chain make_chain(const ChainContext& ctx, std::vector<std::size_t> members);

/// Indices [V_i : V_{i-1}] listed from the top step down.
std::vector<std::size_t> chain_indices(const ChainContext& ctx, const Chain& chain);

/// Group orders of the members, top first, e.g. "12 > 6 > 2".
std::string describe_chain(const ChainContext& ctx, const Chain& chain);

/// ρ(U) = U ∩ A. Throws HypothesisFailed without A, InvalidArgument if U is
/// not between H and G, and InternalInconsistency if (U∩A)H ≠ H(U∩A).
PermutationGroup rho_restrict(const ChainContext& ctx, const PermutationGroup& u);

/// ρ⁻¹(J) = JH. Throws NotPermutable if JH ≠ HJ.
PermutationGroup rho_inverse(const ChainContext& ctx, const PermutationGroup& j);

/// Every maximal chain from G down to H, in depth-first order over
/// maximal_below().
std::vector<Chain> maximal_chains(const ChainContext& ctx);

/// How strictly the exchange walk checks its hypothesis on A.
enum class Hypothesis {
  quasi_hamiltonian,
  /// Only IJ = JI for the groups J between H∩A and A with JH = HJ.
  weak_permutability,
};

/// True iff IJ = JI for all I, J in ρ(lattice).
bool satisfies_weak_permutability(const ChainContext& ctx);

struct ExchangeWalk {
  /// c_0 = from, ..., c_T = to; consecutive chains differ in one interior member.
  std::vector<Chain> chains;
  std::size_t steps() const noexcept { return chains.empty() ? 0 : chains.size() - 1; }
};

/// Passes between two maximal chains by single-member exchanges, following
/// the induction on the top step: equal top steps recurse below; otherwise
/// both chains are routed through V ∩ W and the top member is swapped.
ExchangeWalk exchange_walk(const ChainContext& ctx, const Chain& from, const Chain& to,
                           Hypothesis hypothesis = Hypothesis::quasi_hamiltonian);

/// Empty when `next` is a valid exchange step from `prev`, otherwise the reason.
std::optional<std::string> check_exchange_step(const ChainContext& ctx, const Chain& prev,
                                               const Chain& next);

struct AutQuotient {
  std::size_t order = 0;
  std::string type;
  friend auto operator<=>(const AutQuotient&, const AutQuotient&) = default;
};

/// Per-step invariants of a chain, all listed from the top step down.
struct ChainInvariants {
  std::vector<std::size_t> indices;
  /// Image of V_i acting on the cosets of V_{i-1}.
  std::vector<PermutationGroup> monodromy_quotients;
  /// N_{V_i}(V_{i-1}) / V_{i-1}.
  std::vector<AutQuotient> aut_quotients;
};

ChainInvariants chain_invariants(const ChainContext& ctx, const Chain& chain);

/// Abstract group N_G(U)/U, realized as the regular image of the coset action.
PermutationGroup normalizer_quotient(const PermutationGroup& g, const PermutationGroup& u);

TheoremReport verify_ritt_first(const ChainContext& ctx,
                                Hypothesis hypothesis = Hypothesis::quasi_hamiltonian);
TheoremReport verify_monodromy_invariant(const ChainContext& ctx);
TheoremReport verify_aut_invariant(const ChainContext& ctx);
TheoremReport verify_divisibility(const ChainContext& ctx, const Chain& chain);
/// verify_divisibility on every maximal chain.
TheoremReport verify_divisibility_all(const ChainContext& ctx);
TheoremReport verify_indecomposable_equivalences(const ChainContext& ctx);
/// The ρ bijection laws on every lattice member and pair of members.
TheoremReport verify_rho_bijection(const ChainContext& ctx);

/// For every pair of distinct length-2 maximal chains G > U > H and
/// G > V > H, records which side of "G/core_G(U) ≅ V/core_V(H), or
/// core_G(U) = core_V(H) = core_G(H)" holds. Needs a quasi-Hamiltonian A.
/// Occurrences of the second case are reported, not treated as failures.
TheoremReport scan_monodromy_dichotomy(const ChainContext& ctx);

/// G acting regularly, quasi-Hamiltonian but not Dedekind, and U a non-normal
/// subgroup: reports |G|, |U| and |N_G(U)/U| and checks that |G| does not
/// divide |U|·|N_G(U)/U|.
TheoremReport witness_nondedekind_failure(const PermutationGroup& g, const PermutationGroup& u);

/// First non-normal subgroup of G in lattice order, if any.
std::optional<PermutationGroup> find_nonnormal_subgroup(const PermutationGroup& g);

}  // namespace rittlab
