#include "rittlab/additive.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rittlab/error.hpp"

namespace rittlab {

using nlohmann::json;

SkewPoly::SkewPoly(Field field) : field_(std::move(field)) {
  if (field_.is_rational()) throw InvalidArgument("skew polynomials need a finite field");
}

SkewPoly::SkewPoly(Field field, std::vector<Scalar> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (field_.is_rational()) throw InvalidArgument("skew polynomials need a finite field");
  for (const auto& c : coeffs_) {
    if (!(c.field() == field_)) throw FieldMismatch("coefficient from " + c.field().name());
  }
  strip();
}

SkewPoly SkewPoly::tau_power(const Field& f, std::size_t e) {
  std::vector<Scalar> coeffs(e + 1, Scalar::zero(f));
  coeffs[e] = Scalar::one(f);
  return SkewPoly(f, std::move(coeffs));
}

SkewPoly SkewPoly::from_ints(const Field& f, const std::vector<long long>& codes) {
  std::vector<Scalar> coeffs;
  for (long long c : codes) {
    if (c < 0) throw InvalidArgument("element codes are non-negative");
    coeffs.push_back(Scalar::from_code(f, static_cast<std::uint32_t>(c)));
  }
  return SkewPoly(f, std::move(coeffs));
}

Scalar SkewPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_);
}

const Scalar& SkewPoly::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("zero skew polynomial has no leading coefficient");
  return coeffs_.back();
}

void SkewPoly::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SkewPoly& SkewPoly::operator+=(const SkewPoly& o) {
  if (!(field_ == o.field_)) throw FieldMismatch("skew polynomials over different fields");
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  strip();
  return *this;
}

SkewPoly& SkewPoly::operator-=(const SkewPoly& o) {
  if (!(field_ == o.field_)) throw FieldMismatch("skew polynomials over different fields");
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  strip();
  return *this;
}

std::string SkewPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Scalar& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c.to_string();
      continue;
    }
    if (!c.is_one()) os << c.to_string() << '*';
    os << "tau";
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::string SkewPoly::to_terms() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << ' ';
    os << i << ':' << coeffs_[i].to_string();
    first = false;
  }
  return first ? "0:0" : os.str();
}

Scalar frobenius(const Scalar& c, std::size_t times) {
  Scalar r = c;
  const long long p = c.field().characteristic();
  for (std::size_t i = 0; i < times; ++i) r = r.pow(p);
  return r;
}

SkewPoly skew_mul(const SkewPoly& u, const SkewPoly& v) {
  if (!(u.field() == v.field())) throw FieldMismatch("skew polynomials over different fields");
  const Field& f = u.field();
  if (u.is_zero() || v.is_zero()) return SkewPoly(f);
  std::vector<Scalar> out(u.coeffs().size() + v.coeffs().size() - 1, Scalar::zero(f));
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
    if (u.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.coeffs().size(); ++j) {
      out[i + j] += u.coeffs()[i] * frobenius(v.coeffs()[j], i);
    }
  }
  return SkewPoly(f, std::move(out));
}

Poly to_additive(const SkewPoly& u) {
  const Field& f = u.field();
  Poly out(f);
  std::size_t power = 1;
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
    if (!u.coeffs()[i].is_zero()) out += Poly::monomial(u.coeffs()[i], power);
    power *= f.characteristic();
  }
  return out;
}

SkewPoly from_additive(const Poly& f) {
  const Field& field = f.field();
  if (field.is_rational()) throw NotAdditive("additive polynomials need a finite field");
  const std::size_t p = field.characteristic();
  std::vector<Scalar> coeffs;
  std::size_t power = 1;
  for (std::size_t d = 0; d < f.coeffs().size(); ++d) {
    if (d == power) {
      coeffs.push_back(f.coeffs()[d]);
      power *= p;
    } else if (!f.coeffs()[d].is_zero()) {
      throw NotAdditive("term of degree " + std::to_string(d) + " is not X^(p^i)");
    }
  }
  return SkewPoly(field, std::move(coeffs));
}

SkewDivision right_divide(const SkewPoly& f, const SkewPoly& d) {
  if (d.is_zero()) throw InvalidArgument("skew division by zero");
  if (!(f.field() == d.field())) throw FieldMismatch("skew polynomials over different fields");
  const Field& field = f.field();
  const int e = d.degree();
  SkewPoly rem = f;
  std::vector<Scalar> quot(static_cast<std::size_t>(std::max(f.degree() - e + 1, 0)), Scalar::zero(field));
  while (!rem.is_zero() && rem.degree() >= e) {
    const int m = rem.degree();
    const auto shift = static_cast<std::size_t>(m - e);
    // (c τ^{m-e})·d has leading coefficient c·d_e^{p^{m-e}}.
    const Scalar c = rem.leading() / frobenius(d.leading(), shift);
    quot[shift] += c;
    std::vector<Scalar> mono(shift + 1, Scalar::zero(field));
    mono[shift] = c;
    rem -= skew_mul(SkewPoly(field, std::move(mono)), d);
  }
  return SkewDivision{SkewPoly(field, std::move(quot)), std::move(rem)};
}

namespace {

void check_caps(const SkewPoly& f) {
  if (f.field().size() > kMaxSkewFieldSize) {
    throw CapExceeded("skew factorization is limited to fields of at most " +
                      std::to_string(kMaxSkewFieldSize) + " elements");
  }
  if (f.degree() > kMaxSkewDegree) {
    throw CapExceeded("skew factorization is limited to tau-degree " + std::to_string(kMaxSkewDegree));
  }
}

}  // namespace

std::vector<SkewPoly> monic_right_factors(const SkewPoly& f, int e) {
  check_caps(f);
  std::vector<SkewPoly> out;
  if (e < 0 || e > f.degree()) return out;
  const Field& field = f.field();
  const std::uint32_t q = field.size();
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(e), 0);
  while (true) {
    std::vector<Scalar> coeffs;
    for (auto c : digits) coeffs.push_back(Scalar::from_code(field, c));
    coeffs.push_back(Scalar::one(field));
    SkewPoly d(field, std::move(coeffs));
    if (right_divide(f, d).remainder.is_zero()) out.push_back(std::move(d));
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

bool is_irreducible(const SkewPoly& f) {
  for (int e = 1; e < f.degree(); ++e) {
    if (!monic_right_factors(f, e).empty()) return false;
  }
  return true;
}

std::vector<SkewFactorization> all_complete_skew_factorizations(const SkewPoly& f) {
  if (f.degree() < 1) throw InvalidArgument("factorization needs tau-degree at least 1");
  check_caps(f);
  if (is_irreducible(f)) return {{f}};
  std::vector<SkewFactorization> out;
  for (int e = 1; e < f.degree(); ++e) {
    for (const auto& d : monic_right_factors(f, e)) {
      if (!is_irreducible(d)) continue;
      const SkewPoly q = right_divide(f, d).quotient;
      for (auto left : all_complete_skew_factorizations(q)) {
        left.push_back(d);
        out.push_back(std::move(left));
      }
    }
  }
  return out;
}

std::vector<Poly> brute_force_right_factors(const Poly& f) {
  const Field& field = f.field();
  if (field.is_rational()) throw InvalidArgument("brute-force search needs a finite field");
  constexpr std::uint64_t kMaxCandidates = 1u << 20;
  const int n = f.degree();
  std::vector<Poly> out;
  for (int r = 2; 2 * r <= n; ++r) {
    if (n % r != 0) continue;
    std::uint64_t count = 1;
    for (int i = 1; i < r; ++i) {
      count *= field.size();
      if (count > kMaxCandidates) throw CapExceeded("too many right-factor candidates");
    }
    // h = X^r + h_{r-1} X^{r-1} + ... + h_1 X.
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(r - 1), 0);
    while (true) {
      std::vector<Scalar> coeffs{Scalar::zero(field)};
      for (auto c : digits) coeffs.push_back(Scalar::from_code(field, c));
      coeffs.push_back(Scalar::one(field));
      Poly h(field, std::move(coeffs));
      if (left_cofactor(f, h)) out.push_back(std::move(h));
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == field.size()) digits[k++] = 0;
      if (k == digits.size()) break;
    }
  }
  return out;
}

TheoremReport verify_ore_invariance(const SkewPoly& f) {
  const auto facts = all_complete_skew_factorizations(f);
  std::optional<std::vector<int>> expected;
  json listed = json::array();
  for (const auto& fac : facts) {
    std::vector<int> degrees;
    json factors = json::array();
    for (const auto& g : fac) {
      degrees.push_back(g.degree());
      factors.push_back(g.to_string());
    }
    listed.push_back(json{{"factors", factors}, {"tau_degrees", degrees}});
    std::sort(degrees.begin(), degrees.end());
    if (!expected) {
      expected = degrees;
    } else if (degrees != *expected) {
      throw TheoremViolated("complete skew factorizations disagree",
                            json{{"f", f.to_string()}, {"factorizations", listed}});
    }
  }

  const Field& field = f.field();
  const Poly additive = to_additive(f);
  json general = json{{"ran", false}};
  if (field.size() <= kMaxGeneralCheckField && additive.degree() <= kMaxGeneralCheckDegree) {
    std::set<int> skew_degrees;
    for (int e = 1; e < f.degree(); ++e) {
      if (!monic_right_factors(f, e).empty()) skew_degrees.insert(e);
    }
    json found = json::array();
    std::size_t non_additive = 0;
    for (const auto& h : brute_force_right_factors(additive)) {
      int e = 0;
      std::size_t power = 1;
      while (power < static_cast<std::size_t>(h.degree())) {
        power *= field.characteristic();
        ++e;
      }
      if (power != static_cast<std::size_t>(h.degree()) || !skew_degrees.count(e)) {
        throw TheoremViolated("right factor of the additive polynomial has no skew counterpart",
                              json{{"f", additive.to_string()}, {"h", h.to_string()}});
      }
      bool is_additive = true;
      try {
        is_additive = right_divide(f, from_additive(h)).remainder.is_zero();
      } catch (const NotAdditive&) {
        is_additive = false;
      }
      if (!is_additive) ++non_additive;
      found.push_back(h.to_string());
    }
    general = json{{"ran", true}, {"right_factors", found}, {"non_additive", non_additive}};
  }

  TheoremReport r;
  r.theorem = "ore";
  std::ostringstream os;
  os << facts.size() << " complete factorizations, tau-degrees {";
  for (std::size_t i = 0; i < expected->size(); ++i) os << (i ? "," : "") << (*expected)[i];
  os << "}";
  r.summary = os.str();
  r.details = json{{"f", f.to_string()},
                   {"additive", additive.to_string()},
                   {"factorizations", listed},
                   {"general_check", general}};
  return r;
}

SkewPoly parse_skew_file(std::string_view text) {
  auto kv = parse_key_values(text);
  for (const auto& [k, v] : kv) {
    if (k != "field" && k != "skew" && k != "name") throw ParseError("unknown key '" + k + "'");
  }
  if (!kv.count("field") || !kv.count("skew")) throw ParseError("need 'field:' and 'skew:' lines");
  const Field field = Field::parse(kv["field"]);
  if (field.is_rational()) throw ParseError("skew polynomials need a finite field");
  const Poly terms = parse_terms(field, kv["skew"]);
  return SkewPoly(field, terms.coeffs());
}

}  // namespace rittlab
