#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rittlab/poly.hpp"
#include "rittlab/report.hpp"

namespace rittlab {

/// f = factors[0] ∘ factors[1] ∘ ... ∘ factors.back(), listed left to right.
/// In canonical form every factor except factors[0] is monic with zero
/// constant term, which makes equivalent decompositions syntactically equal.
struct Decomposition {
  std::vector<Poly> factors;

  Poly composite() const;
  std::vector<int> degrees() const;
  bool is_canonical() const;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// The equivalent decomposition in canonical form. Factors must have degree ≥ 1.
Decomposition canonicalize(const Decomposition& d);

/// (f − f(0)) / lc(f): monic with zero constant term.
Poly normalize(const Poly& f);

/// Throws WildCharacteristic if the characteristic divides deg f.
void require_tame(const Poly& f);

struct CompositionPair {
  Poly g;  // outer
  Poly h;  // inner, monic with h(0) = 0
};

/// The unique (g, h) with f = g∘h, deg h = r, h monic and h(0) = 0, if any.
/// h is the approximate s-th root of the normalized f (s = deg f / r),
/// solved top-down from the coefficients of degrees n-1 ... n-r+1; g comes
/// from the base-h expansion.
///
/// Requires 2 ≤ r and r·s = deg f with s ≥ 2 (InvalidArgument otherwise).
std::optional<CompositionPair> right_factor(const Poly& f, std::size_t r);

/// One canonical right factor per proper divisor of deg f that has one,
/// sorted by degree.
std::vector<Poly> canonical_right_factors(const Poly& f);

/// All complete decompositions up to equivalence, in canonical form. The
/// right factors of f are partially ordered by "is a right composition
/// factor of"; each maximal chain X ◁ h_k ◁ ... ◁ h_1 ◁ f gives one
/// decomposition. Listed depth-first with smaller right factors first.
std::vector<Decomposition> all_complete_decompositions(const Poly& f);

/// Largest finite field whose automorphisms are found by a full (a, b) scan.
inline constexpr std::uint32_t kMaxAutScanField = 121;

/// Degree-one μ with f∘μ = f, sorted. Over ℚ only a = ±1 occurs; over small
/// finite fields every (a, b) is tried; over larger tame fields b is solved
/// from the X^{n-1} coefficient for each a with a^n = 1.
std::vector<LinearPoly> aut_group(const Poly& f);

struct GammaOrder {
  bool infinite = false;
  std::size_t order = 0;
};

/// Order of the group Γ(f) of linear μ admitting a linear ν with ν∘f∘μ = f.
/// Conjugating by a shift removes the X^{n-1} term; the order is then the
/// gcd of n − i over the remaining terms c_i X^i with i ≥ 1, and infinite
/// when no such term is left (f is conjugate to X^n up to an outer map).
GammaOrder gamma_order(const Poly& f);

/// The elements μ of Γ(f), for finite fields of at most kMaxAutScanField elements.
std::vector<LinearPoly> gamma_group(const Poly& f);

/// f = g∘h where h is the normalized product of μ(X) over μ ∈ Aut(f).
CompositionPair factorable_core(const Poly& f);

/// Largest degree handled by is_factorable.
inline constexpr int kMaxFactorableDegree = 64;

/// |Aut(f)| = deg f and f(X) − f(Y) = lc(f)·∏_{μ∈Aut(f)} (X − μ(Y)).
bool is_factorable(const Poly& f);

/// Equal lengths, degree multisets and (degree, |Aut|) multisets across all
/// complete decompositions; |Aut(f)| divides ∏|Aut(f_i)| for each of them.
TheoremReport verify_poly_theorems(const Poly& f);

Poly power(const Field& f, std::size_t n);
/// D_0 = 2, D_1 = X, D_n = X·D_{n-1} − a·D_{n-2}.
Poly dickson(const Field& f, std::size_t n, const Scalar& a);
Poly chebyshev_normalized(const Field& f, std::size_t n);

}  // namespace rittlab
