#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rittlab/poly.hpp"
#include "rittlab/report.hpp"

namespace rittlab {

/// num/den with gcd(num, den) = 1 and den monic.
class RationalFunction {
 public:
  /// Reduces on construction. Throws InvalidArgument if den = 0.
  RationalFunction(Poly num, Poly den);
  static RationalFunction from_poly(Poly p);
  static RationalFunction x(const Field& f);

  const Field& field() const noexcept { return num_.field(); }
  const Poly& numerator() const noexcept { return num_; }
  const Poly& denominator() const noexcept { return den_; }
  /// max(deg num, deg den); 0 for constants.
  int degree() const noexcept;
  bool is_polynomial() const noexcept { return den_.degree() == 0; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// "X^3 + X" or "(X^6 + 1)/X^3".
  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

/// A point of the projective line; nullopt is ∞.
using ProjectivePoint = std::optional<Scalar>;

std::string to_string(const ProjectivePoint& p);

/// f evaluated on the projective line.
ProjectivePoint evaluate(const RationalFunction& f, const ProjectivePoint& x);

/// f(g(X)), reduced. Throws DegenerateResult if the result is constant and
/// FieldMismatch for different fields.
RationalFunction compose(const RationalFunction& f, const RationalFunction& g);

/// X ↦ (aX + b)/(cX + d) with ad − bc ≠ 0, scaled so the first nonzero of
/// (a, b, c, d) is 1.
class MobiusMap {
 public:
  /// Throws InvalidArgument when ad − bc = 0.
  MobiusMap(Scalar a, Scalar b, Scalar c, Scalar d);
  static MobiusMap identity(const Field& f);

  const Scalar& a() const noexcept { return a_; }
  const Scalar& b() const noexcept { return b_; }
  const Scalar& c() const noexcept { return c_; }
  const Scalar& d() const noexcept { return d_; }

  RationalFunction as_function() const;
  MobiusMap inverse() const;
  ProjectivePoint operator()(const ProjectivePoint& x) const;

  friend bool operator==(const MobiusMap&, const MobiusMap&) = default;
  friend std::strong_ordering operator<=>(const MobiusMap& l, const MobiusMap& r);

  std::string to_string() const;

 private:
  Scalar a_, b_, c_, d_;
};

/// (l ∘ m)(X) = l(m(X)).
MobiusMap compose(const MobiusMap& l, const MobiusMap& m);

inline ProjectivePoint mobius_apply(const MobiusMap& mu, const ProjectivePoint& x) { return mu(x); }

/// Turns a decomposition of the polynomial f into rational functions
/// (listed left to right) into an equivalent polynomial decomposition in
/// canonical form.
///
/// For each cut, the left part L and right part R satisfy f = L∘R. Since
/// f⁻¹(∞) = {∞}, L⁻¹(∞) is the single point R(∞); conjugating the cut by a
/// Möbius map sending R(∞) to ∞ makes every factor a polynomial.
///
/// Throws NotAPolynomialComposite if the factors do not compose to f.
std::vector<Poly> normalize_poly_decomposition(const Poly& f,
                                               const std::vector<RationalFunction>& factors);

/// Largest field size scanned by aut_search.
inline constexpr std::uint32_t kMaxMobiusScanField = 31;

/// Every μ ∈ PGL₂(F_q) with f∘μ = f, sorted. Checks the result is closed
/// under composition and has at most deg f elements (TheoremViolated
/// otherwise). Requires a finite field of at most kMaxMobiusScanField
/// elements and deg f ≥ 1.
std::vector<MobiusMap> aut_search(const RationalFunction& f);

/// Aut orders for f = outer∘inner and each factor over F_p. Whether |Aut(f)|
/// divides |Aut(outer)|·|Aut(inner)| is reported, not asserted.
TheoremReport composition_aut_report(const RationalFunction& outer, const RationalFunction& inner);

/// f₁ = X + 1/X, f₂ = X³ − 3X and f = f₂∘f₁ = X³ + X⁻³ over F_p. Checks the
/// composition identity, |Aut(f)| = 6, |Aut(f₂)| = 1, |Aut(f₁)| = 2, and that
/// 6 does not divide 1·2.
///
/// Throws BadPrime unless p is a prime with p ≡ 1 (mod 3), and CapExceeded
/// for p > kMaxMobiusScanField.
TheoremReport counterexample_report(std::uint32_t p);

/// Rational function file: "field: ...", "num: <terms>" and optionally "den: <terms>".
RationalFunction parse_ratfunc_file(std::string_view text);

}  // namespace rittlab
