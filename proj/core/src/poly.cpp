#include "rittlab/poly.hpp"

#include <sstream>

#include "rittlab/error.hpp"

namespace rittlab {

Poly::Poly(Field field) : field_(std::move(field)) {}

Poly::Poly(Field field, std::vector<Scalar> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.field() == field_)) throw FieldMismatch("coefficient from " + c.field().name());
  }
  strip();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Scalar> coeffs(degree + 1, Scalar::zero(c.field()));
  coeffs[degree] = c;
  return Poly(c.field(), std::move(coeffs));
}

Poly Poly::x(const Field& f) { return monomial(Scalar::one(f), 1); }

Poly Poly::from_ints(const Field& f, const std::vector<long long>& coeffs) {
  std::vector<Scalar> out;
  out.reserve(coeffs.size());
  for (long long c : coeffs) out.emplace_back(f, c);
  return Poly(f, std::move(out));
}

Scalar Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_);
}

const Scalar& Poly::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

void Poly::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::require_same(const Poly& o) const {
  if (!(field_ == o.field_)) {
    throw FieldMismatch("polynomials over " + field_.name() + " and " + o.field_.name());
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  strip();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  strip();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  require_same(o);
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> out(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  strip();
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  for (auto& x : coeffs_) x *= c;
  strip();
  return *this;
}

Scalar Poly::operator()(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Scalar> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * Scalar(field_, static_cast<long long>(i)));
  }
  return Poly(field_, std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

namespace {

bool is_negative(const Scalar& c) { return c.field().is_rational() && c.rational() < 0; }

}  // namespace

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    Scalar c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool neg = is_negative(c);
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << c.to_string();
      continue;
    }
    if (!c.is_one()) os << c.to_string() << '*';
    os << 'X';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::string Poly::to_terms() const {
  if (is_zero()) return "0:0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << ' ';
    os << i << ':' << coeffs_[i].to_string();
    first = false;
  }
  return os.str();
}

Poly compose(const Poly& g, const Poly& h) {
  if (!(g.field() == h.field())) throw FieldMismatch("compose over different fields");
  Poly acc(g.field());
  for (std::size_t i = g.coeffs().size(); i-- > 0;) {
    acc *= h;
    acc += Poly::constant(g.coeffs()[i]);
  }
  return acc;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (!(a.field() == b.field())) throw FieldMismatch("divmod over different fields");
  const Field& f = a.field();
  std::vector<Scalar> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(f), a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db + 1), Scalar::zero(f));
  const Scalar inv_lead = b.leading().inverse();
  const bool monic = b.leading().is_one();
  for (int i = a.degree(); i >= db; --i) {
    const Scalar& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    const Scalar c = monic ? top : top * inv_lead;
    quot[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.erase(rem.begin() + db, rem.end());
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly pow(const Poly& p, std::size_t n) {
  Poly result = Poly::constant(Scalar::one(p.field()));
  Poly base = p;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

std::vector<Poly> base_expansion(const Poly& f, const Poly& h) {
  if (h.degree() < 1) throw InvalidArgument("base of an expansion must have positive degree");
  std::vector<Poly> digits;
  Poly rest = f;
  while (!rest.is_zero()) {
    auto [q, r] = divmod(rest, h);
    digits.push_back(std::move(r));
    rest = std::move(q);
  }
  return digits;
}

std::optional<Poly> left_cofactor(const Poly& f, const Poly& h) {
  std::vector<Scalar> g;
  for (const auto& digit : base_expansion(f, h)) {
    if (digit.degree() > 0) return std::nullopt;
    g.push_back(digit.coeff(0));
  }
  return Poly(f.field(), std::move(g));
}

Poly LinearPoly::as_poly() const { return Poly(a.field(), {b, a}); }

LinearPoly LinearPoly::inverse() const {
  const Scalar ai = a.inverse();
  return {ai, -(b * ai)};
}

LinearPoly compose(const LinearPoly& l, const LinearPoly& m) {
  return {l.a * m.a, l.a * m.b + l.b};
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::map<std::string, std::string> parse_key_values(std::string_view text) {
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto colon = t.find(':');
    if (colon == std::string::npos) {
      throw ParseError("line " + std::to_string(lineno) + ": expected 'key: value'");
    }
    std::string key = trim(std::string_view(t).substr(0, colon));
    if (!out.emplace(key, trim(std::string_view(t).substr(colon + 1))).second) {
      throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
  }
  return out;
}

Poly parse_terms(const Field& f, std::string_view terms) {
  std::istringstream in{std::string(terms)};
  std::string term;
  std::map<std::size_t, Scalar> coeffs;
  while (in >> term) {
    const auto colon = term.find(':');
    if (colon == std::string::npos || colon == 0) throw ParseError("bad term '" + term + "'");
    std::size_t deg = 0;
    try {
      std::size_t used = 0;
      deg = std::stoul(term.substr(0, colon), &used);
      if (used != colon) throw ParseError("bad degree in '" + term + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad degree in '" + term + "'");
    }
    if (deg > 100'000) throw ParseError("degree too large in '" + term + "'");
    Scalar c = Scalar::parse(f, std::string_view(term).substr(colon + 1));
    auto [it, inserted] = coeffs.emplace(deg, c);
    if (!inserted) it->second += c;
  }
  if (coeffs.empty()) return Poly(f);
  std::vector<Scalar> dense(coeffs.rbegin()->first + 1, Scalar::zero(f));
  for (auto& [d, c] : coeffs) dense[d] = c;
  return Poly(f, std::move(dense));
}

Poly parse_poly_file(std::string_view text) {
  auto kv = parse_key_values(text);
  for (const auto& [k, v] : kv) {
    if (k != "field" && k != "poly" && k != "name") throw ParseError("unknown key '" + k + "'");
  }
  if (!kv.count("field") || !kv.count("poly")) throw ParseError("need 'field:' and 'poly:' lines");
  return parse_terms(Field::parse(kv["field"]), kv["poly"]);
}

}  // namespace rittlab
