#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rittlab/field.hpp"

namespace rittlab {

/// Dense univariate polynomial, coefficients low-to-high with trailing zeros
/// stripped. The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  explicit Poly(Field field);
  Poly(Field field, std::vector<Scalar> coeffs);

  static Poly constant(const Scalar& c);
  static Poly monomial(const Scalar& c, std::size_t degree);
  /// The identity X.
  static Poly x(const Field& f);
  /// Integer coefficients, low-to-high.
  static Poly from_ints(const Field& f, const std::vector<long long>& coeffs);

  const Field& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  /// Zero beyond the degree.
  Scalar coeff(std::size_t i) const;
  /// Throws InvalidArgument on the zero polynomial.
  const Scalar& leading() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  Scalar operator()(const Scalar& x) const;
  Poly derivative() const;
  /// Divides by the leading coefficient.
  Poly monic() const;

  /// "X^6 - 6*X^4 + 9*X^2 - 2". Finite-field coefficients print as codes.
  std::string to_string() const;
  /// Sparse "deg:coeff" terms from high to low degree, as in input files.
  std::string to_terms() const;

 private:
  void strip();
  void require_same(const Poly& o) const;
  Field field_;
  std::vector<Scalar> coeffs_;
};

/// g(h(X)).
Poly compose(const Poly& g, const Poly& h);

/// (quotient, remainder) with a = q·b + r and deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd; zero if both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

Poly pow(const Poly& p, std::size_t n);

/// Expansion of f in base h: f = Σ c_i·h^i with deg c_i < deg h. Used to
/// recover g from f = g∘h once h is known: the expansion has constant digits
/// exactly when such a g exists, and then g = Σ c_i X^i.
std::vector<Poly> base_expansion(const Poly& f, const Poly& h);

/// g with f = g∘h, or nothing when h is not a right composition factor of f.
std::optional<Poly> left_cofactor(const Poly& f, const Poly& h);

/// aX + b with a ≠ 0.
struct LinearPoly {
  Scalar a;
  Scalar b;

  static LinearPoly identity(const Field& f) { return {Scalar::one(f), Scalar::zero(f)}; }
  Poly as_poly() const;
  LinearPoly inverse() const;
  Scalar operator()(const Scalar& x) const { return a * x + b; }
  friend bool operator==(const LinearPoly&, const LinearPoly&) = default;
  friend auto operator<=>(const LinearPoly& l, const LinearPoly& r) {
    if (auto c = l.a <=> r.a; c != 0) return c;
    return l.b <=> r.b;
  }
};

/// (l ∘ m)(X) = l(m(X)).
LinearPoly compose(const LinearPoly& l, const LinearPoly& m);

/// Key/value lines "key: value", blank lines and '#' comments ignored.
/// Throws ParseError on malformed lines or duplicate keys.
std::map<std::string, std::string> parse_key_values(std::string_view text);

/// Sparse terms "<deg>:<coeff> ...".
Poly parse_terms(const Field& f, std::string_view terms);

/// Polynomial file: "field: <field>" and "poly: <terms>".
Poly parse_poly_file(std::string_view text);

}  // namespace rittlab
