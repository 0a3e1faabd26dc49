#include "rittlab/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "rittlab/error.hpp"

namespace rittlab {

struct Field::Data {
  enum class Kind { rational, prime, extension } kind = Kind::rational;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  // Extension fields: exp_table[i] = g^i for i < 2(q-1), log_table[x] for x ≠ 0.
  std::vector<std::uint32_t> exp_table;
  std::vector<std::uint32_t> log_table;
  std::string name;
};

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::uint32_t parse_uint(std::string_view s, const char* what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(std::string("bad ") + what + ": '" + std::string(s) + "'");
  }
  return v;
}

mpz_class parse_integer(std::string_view s) {
  std::string t = trim(s);
  std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (start == t.size() ||
      !std::all_of(t.begin() + static_cast<long>(start), t.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw ParseError("bad integer: '" + t + "'");
  }
  if (t[0] == '+') t.erase(0, 1);
  return mpz_class(t, 10);
}

// Digits of a code in base p, length k.
std::vector<std::uint32_t> digits(std::uint32_t code, std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> d(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

std::uint32_t from_digits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return code;
}

// Product of two residues modulo the monic modulus, by schoolbook reduction.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p,
                       const std::vector<std::uint32_t>& modulus) {
  const std::uint32_t k = static_cast<std::uint32_t>(modulus.size() - 1);
  auto da = digits(a, p, k);
  auto db = digits(b, p, k);
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  for (std::size_t top = 2 * k - 1; top >= k; --top) {
    const std::uint64_t c = prod[top];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= k; ++i) {
      prod[top - k + i] = (prod[top - k + i] + (p - c) * modulus[i]) % p;
    }
  }
  std::vector<std::uint32_t> out(k);
  for (std::uint32_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return from_digits(out, p);
}

std::string terms_string(const std::vector<std::uint32_t>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] == 0) continue;
    if (!first) os << ' ';
    os << i << ':' << coeffs[i];
    first = false;
  }
  return os.str();
}

}  // namespace

Field Field::rationals() {
  static const auto data = [] {
    auto d = std::make_shared<Data>();
    d->name = "Q";
    return d;
  }();
  return Field(data);
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) {
    throw InvalidArgument("F" + std::to_string(p) + ": characteristic must be a prime below 2^31");
  }
  auto d = std::make_shared<Data>();
  d->kind = Data::Kind::prime;
  d->p = p;
  d->q = p;
  d->modulus = {0, 1};
  d->name = "F" + std::to_string(p);
  return Field(d);
}

Field Field::extension(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw InvalidArgument("extension field characteristic must be prime");
  if (modulus.size() < 3 || modulus.back() != 1) {
    throw InvalidArgument("modulus must be monic of degree at least 2");
  }
  const std::uint32_t k = static_cast<std::uint32_t>(modulus.size() - 1);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxExtensionFieldSize) {
      throw InvalidArgument("extension field larger than " +
                            std::to_string(kMaxExtensionFieldSize) + " elements");
    }
  }
  for (auto c : modulus) {
    if (c >= p) throw InvalidArgument("modulus coefficient out of range");
  }
  auto d = std::make_shared<Data>();
  d->kind = Data::Kind::extension;
  d->p = p;
  d->k = k;
  d->q = static_cast<std::uint32_t>(q);
  d->modulus = std::move(modulus);

  // A primitive element exists iff the quotient ring is a field.
  const std::uint32_t units = d->q - 1;
  for (std::uint32_t g = 1; g < d->q && d->exp_table.empty(); ++g) {
    std::vector<std::uint32_t> powers{1};
    std::uint32_t x = g;
    while (x != 1 && x != 0 && powers.size() <= units) {
      powers.push_back(x);
      x = slow_mul(x, g, p, d->modulus);
    }
    if (x == 1 && powers.size() == units) {
      d->exp_table = powers;
      d->exp_table.insert(d->exp_table.end(), powers.begin(), powers.end());
    }
  }
  if (d->exp_table.empty()) throw InvalidArgument("modulus is not irreducible");
  d->log_table.assign(d->q, 0);
  for (std::uint32_t i = 0; i < units; ++i) d->log_table[d->exp_table[i]] = i;

  if (p == 2 && d->modulus == std::vector<std::uint32_t>{1, 1, 1}) {
    d->name = "F4";
  } else if (p == 3 && d->modulus == std::vector<std::uint32_t>{1, 0, 1}) {
    d->name = "F9";
  } else {
    d->name = "F" + std::to_string(p) + "^" + std::to_string(k) + " mod " + terms_string(d->modulus);
  }
  return Field(d);
}

Field Field::gf4() {
  static const Field f = extension(2, {1, 1, 1});
  return f;
}

Field Field::gf9() {
  static const Field f = extension(3, {1, 0, 1});
  return f;
}

Field Field::parse(std::string_view text) {
  const std::string t = trim(text);
  if (t == "Q") return rationals();
  if (t == "F4") return gf4();
  if (t == "F9") return gf9();
  if (t.size() < 2 || t[0] != 'F') throw ParseError("unknown field: '" + t + "'");
  const auto caret = t.find('^');
  if (caret == std::string::npos) {
    const std::uint32_t p = parse_uint(std::string_view(t).substr(1), "field characteristic");
    if (!is_prime(p)) {
      throw ParseError("F" + std::to_string(p) + " needs an explicit modulus: F<p>^<k> mod <terms>");
    }
    return prime(p);
  }
  const std::uint32_t p = parse_uint(std::string_view(t).substr(1, caret - 1), "field characteristic");
  const auto mod_pos = t.find(" mod ", caret);
  if (mod_pos == std::string::npos) throw ParseError("missing 'mod <terms>' in '" + t + "'");
  const std::uint32_t k =
      parse_uint(trim(std::string_view(t).substr(caret + 1, mod_pos - caret - 1)), "extension degree");
  std::vector<std::uint32_t> modulus(k + 1, 0);
  std::istringstream terms(t.substr(mod_pos + 5));
  std::string term;
  while (terms >> term) {
    const auto colon = term.find(':');
    if (colon == std::string::npos) throw ParseError("bad modulus term '" + term + "'");
    const std::uint32_t deg = parse_uint(std::string_view(term).substr(0, colon), "modulus degree");
    if (deg > k) throw ParseError("modulus term '" + term + "' exceeds the extension degree");
    const mpz_class c = parse_integer(std::string_view(term).substr(colon + 1));
    mpz_class r = c % p;
    if (r < 0) r += p;
    modulus[deg] = static_cast<std::uint32_t>(r.get_ui());
  }
  try {
    return extension(p, std::move(modulus));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

bool Field::is_rational() const noexcept { return d_->kind == Data::Kind::rational; }
std::uint32_t Field::characteristic() const noexcept { return d_->p; }
std::uint32_t Field::degree() const noexcept { return d_->k; }
std::uint32_t Field::size() const noexcept { return d_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return d_->modulus; }
std::string Field::name() const { return d_->name; }

bool operator==(const Field& a, const Field& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->kind == b.d_->kind && a.d_->p == b.d_->p && a.d_->modulus == b.d_->modulus;
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  const auto p = d_->p;
  if (d_->kind == Data::Kind::prime) {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p ? s - p : s);
  }
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t i = 0; i < d_->k; ++i) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

std::uint32_t Field::neg(std::uint32_t a) const {
  const auto p = d_->p;
  if (d_->kind == Data::Kind::prime) return a == 0 ? 0 : p - a;
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t i = 0; i < d_->k; ++i) {
    out += ((p - a % p) % p) * scale;
    a /= p;
    scale *= p;
  }
  return out;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  if (d_->kind == Data::Kind::prime) {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % d_->p);
  }
  if (a == 0 || b == 0) return 0;
  return d_->exp_table[d_->log_table[a] + d_->log_table[b]];
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw InvalidArgument("division by zero");
  if (d_->kind == Data::Kind::prime) {
    // Fermat: a^(p-2).
    std::uint64_t result = 1;
    std::uint64_t base = a;
    for (std::uint32_t e = d_->p - 2; e; e >>= 1) {
      if (e & 1) result = result * base % d_->p;
      base = base * base % d_->p;
    }
    return static_cast<std::uint32_t>(result);
  }
  const std::uint32_t units = d_->q - 1;
  return d_->exp_table[(units - d_->log_table[a]) % units];
}

std::uint32_t Field::from_integer(long long v) const {
  if (is_rational()) throw InvalidArgument("from_integer needs a finite field");
  long long r = v % static_cast<long long>(d_->p);
  if (r < 0) r += d_->p;
  return static_cast<std::uint32_t>(r);
}

Scalar::Scalar(Field field) : field_(std::move(field)) {
  if (field_.is_rational()) value_ = mpq_class(0);
}

Scalar::Scalar(Field field, long long value) : field_(std::move(field)) {
  if (field_.is_rational()) {
    value_ = mpq_class(mpz_class(std::to_string(value), 10));
  } else {
    value_ = field_.from_integer(value);
  }
}

Scalar::Scalar(Field field, mpq_class value) : field_(std::move(field)) {
  if (!field_.is_rational()) throw FieldMismatch("rational value for a finite field");
  value.canonicalize();
  value_ = std::move(value);
}

Scalar Scalar::from_code(const Field& f, std::uint32_t code) {
  if (f.is_rational() || code >= f.size()) throw InvalidArgument("element code out of range");
  Scalar s(f);
  s.value_ = code;
  return s;
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  const std::string t = trim(text);
  const auto slash = t.find('/');
  if (slash != std::string::npos) {
    const mpz_class num = parse_integer(std::string_view(t).substr(0, slash));
    const mpz_class den = parse_integer(std::string_view(t).substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + t + "'");
    if (f.is_rational()) return Scalar(f, mpq_class(num, den));
    if (f.degree() > 1) throw ParseError("F_{p^k} coefficients are element codes, not fractions");
    const Scalar d = parse(f, den.get_str());
    if (d.is_zero()) throw ParseError("denominator vanishes in " + f.name());
    return parse(f, num.get_str()) / d;
  }
  const mpz_class v = parse_integer(t);
  if (f.is_rational()) return Scalar(f, mpq_class(v));
  if (f.degree() == 1) {
    mpz_class r = v % f.characteristic();
    if (r < 0) r += f.characteristic();
    return from_code(f, static_cast<std::uint32_t>(r.get_ui()));
  }
  const mpz_class mag = abs(v);
  if (mag >= f.size()) throw ParseError("element code " + t + " out of range for " + f.name());
  Scalar s = from_code(f, static_cast<std::uint32_t>(mag.get_ui()));
  return v < 0 ? -s : s;
}

bool Scalar::is_zero() const {
  if (const auto* c = std::get_if<std::uint32_t>(&value_)) return *c == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const {
  if (const auto* c = std::get_if<std::uint32_t>(&value_)) return *c == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldMismatch("not a rational scalar");
}

std::uint32_t Scalar::code() const {
  if (const auto* c = std::get_if<std::uint32_t>(&value_)) return *c;
  throw FieldMismatch("not a finite-field scalar");
}

void Scalar::require_same(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw FieldMismatch("scalars from " + field_.name() + " and " + o.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (auto* c = std::get_if<std::uint32_t>(&r.value_)) {
    *c = field_.neg(*c);
  } else {
    auto& q = std::get<mpq_class>(r.value_);
    q = -q;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  if (auto* c = std::get_if<std::uint32_t>(&value_)) {
    *c = field_.add(*c, std::get<std::uint32_t>(o.value_));
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o);
  if (auto* c = std::get_if<std::uint32_t>(&value_)) {
    *c = field_.sub(*c, std::get<std::uint32_t>(o.value_));
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  if (auto* c = std::get_if<std::uint32_t>(&value_)) {
    *c = field_.mul(*c, std::get<std::uint32_t>(o.value_));
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero");
  Scalar r = *this;
  if (auto* c = std::get_if<std::uint32_t>(&r.value_)) {
    *c = field_.inv(*c);
  } else {
    auto& q = std::get<mpq_class>(r.value_);
    q = 1 / q;
  }
  return r;
}

Scalar Scalar::pow(long long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                                : static_cast<unsigned long long>(e);
  Scalar result = one(field_);
  while (n) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  a.require_same(b);
  if (const auto* c = std::get_if<std::uint32_t>(&a.value_)) {
    return *c <=> std::get<std::uint32_t>(b.value_);
  }
  const int s = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::to_string() const {
  if (const auto* c = std::get_if<std::uint32_t>(&value_)) return std::to_string(*c);
  return std::get<mpq_class>(value_).get_str();
}

std::vector<Scalar> field_elements(const Field& f) {
  if (f.is_rational()) throw InvalidArgument("field_elements needs a finite field");
  std::vector<Scalar> out;
  out.reserve(f.size());
  for (std::uint32_t c = 0; c < f.size(); ++c) out.push_back(Scalar::from_code(f, c));
  return out;
}

}  // namespace rittlab
