#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rittlab/permutation.hpp"
#include "rittlab/poly.hpp"

namespace rittlab {

/// A Laurent polynomial Σ_{d=low}^{high} c_d s^d with exact coefficients.
class LaurentPoly {
 public:
  explicit LaurentPoly(Field field);
  /// coeffs[k] is the coefficient of s^{low + k}.
  LaurentPoly(Field field, int low, std::vector<Scalar> coeffs);
  static LaurentPoly monomial(const Scalar& c, int degree);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Lowest and highest degree with a nonzero coefficient (undefined when zero).
  int low() const noexcept { return low_; }
  int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Scalar coeff(int degree) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.field_ == b.field_ && a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// s ↦ λ·s.
  LaurentPoly scale_variable(const Scalar& lambda) const;
  /// s ↦ s^k for k ≥ 1.
  LaurentPoly power_variable(int k) const;

 private:
  void normalize();
  Field field_;
  int low_ = 0;
  std::vector<Scalar> coeffs_;
};

/// f(x) for a polynomial f and a Laurent polynomial x.
LaurentPoly evaluate(const Poly& f, const LaurentPoly& x);

/// x_c = c·s + a_0 + a_{-1} s^{-1} + ... + a_{-M} s^{-M}, the branch of
/// f(x) = s^n at infinity with leading coefficient c.
struct LaurentBranch {
  Scalar c;
  /// tail[i] = a_{-i} for i = 0..M.
  std::vector<Scalar> tail;

  std::size_t precision() const noexcept { return tail.empty() ? 0 : tail.size() - 1; }
  LaurentPoly series() const;
};

/// Leading coefficients c with lc(f)·c^n = 1, sorted by element code.
std::vector<Scalar> branch_leading_coefficients(const Poly& f);

/// Solves a_0, a_{-1}, ..., a_{-M} one at a time: a_{-i} is the unique value
/// making the coefficient of s^{n-1-i} in f(x_c) − s^n vanish, a linear
/// equation with leading coefficient n·lc(f)·c^{n-1}.
///
/// Requires a finite field. Throws WildCharacteristic if the characteristic
/// divides n, BadLeadingCoefficient unless lc(f)·c^n = 1.
LaurentBranch solve_branch(const Poly& f, const Scalar& c, std::size_t precision);

/// Default precision 2·deg f.
inline std::size_t default_precision(const Poly& f) { return 2 * static_cast<std::size_t>(f.degree()); }

/// Coefficients of f(x_c) − s^n at degrees n−1, n−2, ..., n−1−M.
std::vector<Scalar> branch_residuals(const Poly& f, const LaurentBranch& branch);

/// Every residual is zero.
bool verify_branch(const Poly& f, const LaurentBranch& branch);

struct InertiaCycle {
  Scalar theta;
  /// Sorted by the code of c; branch i is point i of `permutation`.
  std::vector<LaurentBranch> branches;
  /// i ↦ index of the branch with leading coefficient θ·c_i.
  Permutation permutation;
};

/// Smallest (by code) element of multiplicative order exactly n, if any.
std::optional<Scalar> primitive_root_of_unity(const Field& f, std::size_t n);

/// Substitutes s ↦ θ·s: x_c(θs) is again a solution of f(x) = (θs)^n = s^n
/// (θ^n = 1) with leading coefficient θc, so by uniqueness it is x_{θc}.
/// The branch permutation c ↦ θc is returned after checking it is an n-cycle
/// and that x_c(θs) agrees with x_{θc} coefficient by coefficient.
///
/// θ defaults to primitive_root_of_unity(field, n). Throws InvalidArgument
/// if there are not n branches or θ is not a primitive n-th root of unity.
InertiaCycle monodromy_at_infinity(const Poly& f, std::size_t precision,
                                   std::optional<Scalar> theta = std::nullopt);

}  // namespace rittlab
