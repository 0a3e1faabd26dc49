#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rittlab/poly.hpp"
#include "rittlab/report.hpp"

namespace rittlab {

/// Σ c_i τ^i over a finite field of characteristic p, where τ stands for
/// X ↦ X^p and multiplication obeys τ·c = c^p·τ. Products correspond to
/// composition of the additive polynomials Σ c_i X^{p^i}.
class SkewPoly {
 public:
  /// Zero. Throws InvalidArgument for ℚ.
  explicit SkewPoly(Field field);
  SkewPoly(Field field, std::vector<Scalar> coeffs);
  static SkewPoly tau_power(const Field& f, std::size_t e);
  static SkewPoly from_ints(const Field& f, const std::vector<long long>& codes);

  const Field& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  Scalar coeff(std::size_t i) const;
  const Scalar& leading() const;
  bool is_monic() const { return !is_zero() && leading().is_one(); }

  SkewPoly& operator+=(const SkewPoly& o);
  SkewPoly& operator-=(const SkewPoly& o);
  friend SkewPoly operator+(SkewPoly a, const SkewPoly& b) { return a += b; }
  friend SkewPoly operator-(SkewPoly a, const SkewPoly& b) { return a -= b; }
  friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  /// "tau^2 + 2*tau + 1", coefficients as element codes.
  std::string to_string() const;
  /// "<i>:<code> ..." from high to low.
  std::string to_terms() const;

 private:
  void strip();
  Field field_;
  std::vector<Scalar> coeffs_;
};

/// c^{p^times}.
Scalar frobenius(const Scalar& c, std::size_t times);

/// u·v = Σ u_i v_j^{p^i} τ^{i+j}.
SkewPoly skew_mul(const SkewPoly& u, const SkewPoly& v);
inline SkewPoly operator*(const SkewPoly& u, const SkewPoly& v) { return skew_mul(u, v); }

/// Σ c_i X^{p^i}.
Poly to_additive(const SkewPoly& u);
/// Inverse of to_additive. Throws NotAdditive if some exponent is not a power of p.
SkewPoly from_additive(const Poly& f);

struct SkewDivision {
  SkewPoly quotient;
  SkewPoly remainder;
};

/// f = q·d + r with deg r < deg d. Throws InvalidArgument if d = 0.
SkewDivision right_divide(const SkewPoly& f, const SkewPoly& d);

/// Limits of the exhaustive factorization search.
inline constexpr std::uint32_t kMaxSkewFieldSize = 9;
inline constexpr int kMaxSkewDegree = 5;

/// Monic d of τ-degree e with f = q·d, found by trying every coefficient vector.
std::vector<SkewPoly> monic_right_factors(const SkewPoly& f, int e);

/// No monic right factor of τ-degree strictly between 0 and deg f.
bool is_irreducible(const SkewPoly& f);

/// Factors listed left to right: f = factors[0] · factors[1] · ... . All
/// factors except factors[0] are monic.
using SkewFactorization = std::vector<SkewPoly>;

/// Every factorization of f into irreducibles, recursing on monic
/// irreducible right factors. Throws CapExceeded beyond kMaxSkewFieldSize
/// or kMaxSkewDegree.
std::vector<SkewFactorization> all_complete_skew_factorizations(const SkewPoly& f);

/// Largest field and X-degree for which verify_ore_invariance also runs the
/// general decomposition search on the additive polynomial.
inline constexpr std::uint32_t kMaxGeneralCheckField = 4;
inline constexpr int kMaxGeneralCheckDegree = 16;

/// Every monic h with h(0) = 0 and 1 < deg h < deg f, deg h | deg f, such that
/// f = g∘h for some g. Exhaustive over the coefficients of h; throws
/// CapExceeded when more than 2^20 candidates would be tried.
std::vector<Poly> brute_force_right_factors(const Poly& f);

/// All complete skew factorizations agree in length and τ-degree multiset.
/// Within the general-check limits, every right factor of the additive
/// polynomial found by brute force must have degree p^e for some τ-degree e
/// of a monic skew right factor. Whether those right factors are themselves
/// additive is reported without being asserted.
TheoremReport verify_ore_invariance(const SkewPoly& f);

/// Skew file: "field: F<p>|F4|F9|..." and "skew: <i>:<coeff> ...".
SkewPoly parse_skew_file(std::string_view text);

}  // namespace rittlab
