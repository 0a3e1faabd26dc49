#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace rittlab {

/// Largest extension field F_{p^k} (k ≥ 2) that can be constructed; its
/// multiplication goes through log/exp tables.
inline constexpr std::uint32_t kMaxExtensionFieldSize = 1024;

/// A field descriptor: ℚ, a prime field F_p, or F_p[t]/(m(t)) for a monic
/// irreducible m. Cheap to copy; copies share their tables.
///
/// Elements of finite fields are encoded as integers 0..q-1. For F_p that is
/// the residue; for F_{p^k} it is Σ d_i p^i where d_0 + d_1 t + ... is the
/// residue polynomial.
class Field {
 public:
  static Field rationals();
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  /// `modulus` is monic, low-to-high, of degree k ≥ 2 over F_p. Throws
  /// InvalidArgument if it is reducible or q exceeds kMaxExtensionFieldSize.
  static Field extension(std::uint32_t p, std::vector<std::uint32_t> modulus);
  /// F_2[t]/(t²+t+1); t has code 2.
  static Field gf4();
  /// F_3[t]/(t²+1); t has code 3.
  static Field gf9();

  /// "Q", "F7", "F4", "F9" or "F<p>^<k> mod <terms>".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept;
  bool is_finite() const noexcept { return !is_rational(); }
  /// 0 for ℚ.
  std::uint32_t characteristic() const noexcept;
  /// Extension degree k over the prime field; 1 for F_p and ℚ.
  std::uint32_t degree() const noexcept;
  /// q = p^k; 0 for ℚ.
  std::uint32_t size() const noexcept;
  const std::vector<std::uint32_t>& modulus() const noexcept;
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b);

  // Arithmetic on element codes of a finite field.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  /// Throws InvalidArgument on zero.
  std::uint32_t inv(std::uint32_t a) const;
  /// Reduces an integer into the prime subfield.
  std::uint32_t from_integer(long long v) const;

  struct Data;

 private:
  explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// An element of a Field. Mixing fields in one operation throws FieldMismatch.
class Scalar {
 public:
  /// Zero of `field`.
  explicit Scalar(Field field);
  Scalar(Field field, long long value);
  /// Requires a rational field.
  Scalar(Field field, mpq_class value);

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }
  /// Element with the given code; throws InvalidArgument if out of range.
  static Scalar from_code(const Field& f, std::uint32_t code);
  /// "3", "-2", "5/7"; for F_{p^k} an element code, optionally negated.
  static Scalar parse(const Field& f, std::string_view text);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// The value of a rational scalar.
  const mpq_class& rational() const;
  /// The code of a finite-field scalar.
  std::uint32_t code() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Throws InvalidArgument on zero.
  Scalar inverse() const;
  /// Negative exponents invert first.
  Scalar pow(long long e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Deterministic total order: rationals by value, finite fields by code.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void require_same(const Scalar& o) const;
  Field field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

/// Every element of a finite field in code order.
std::vector<Scalar> field_elements(const Field& f);

}  // namespace rittlab
