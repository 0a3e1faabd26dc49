#include "rittlab/ratfunc.hpp"

#include <algorithm>
#include <numeric>

#include "rittlab/error.hpp"
#include "rittlab/polyfield.hpp"

namespace rittlab {

using nlohmann::json;

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.field() == den_.field())) throw FieldMismatch("numerator and denominator over different fields");
  if (den_.is_zero()) throw InvalidArgument("zero denominator");
  const Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const Scalar lc_inv = den_.leading().inverse();
  num_ *= lc_inv;
  den_ *= lc_inv;
}

RationalFunction RationalFunction::from_poly(Poly p) {
  const Field f = p.field();
  return RationalFunction(std::move(p), Poly::constant(Scalar::one(f)));
}

RationalFunction RationalFunction::x(const Field& f) { return from_poly(Poly::x(f)); }

int RationalFunction::degree() const noexcept { return std::max({num_.degree(), den_.degree(), 0}); }

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  auto wrap = [](const std::string& t) { return t.find(' ') == std::string::npos ? t : "(" + t + ")"; };
  return wrap(num_.to_string()) + "/" + wrap(den_.to_string());
}

std::string to_string(const ProjectivePoint& p) { return p ? p->to_string() : "inf"; }

ProjectivePoint evaluate(const RationalFunction& f, const ProjectivePoint& x) {
  const Poly& n = f.numerator();
  const Poly& d = f.denominator();
  if (!x) {
    if (n.degree() > d.degree()) return std::nullopt;
    if (n.degree() < d.degree()) return Scalar::zero(f.field());
    return n.leading() / d.leading();
  }
  const Scalar dv = d(*x);
  if (dv.is_zero()) return std::nullopt;
  return n(*x) / dv;
}

namespace {

// Σ c_i P^i Q^{k-i}: the numerator of p(P/Q) over the common denominator Q^k.
Poly homogenize(const Poly& p, const Poly& P, const Poly& Q, std::size_t k) {
  Poly acc(p.field());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i].is_zero()) continue;
    acc += p.coeffs()[i] * pow(P, i) * pow(Q, k - i);
  }
  return acc;
}

}  // namespace

RationalFunction compose(const RationalFunction& f, const RationalFunction& g) {
  if (!(f.field() == g.field())) throw FieldMismatch("composition over different fields");
  const auto k = static_cast<std::size_t>(f.degree());
  RationalFunction out(homogenize(f.numerator(), g.numerator(), g.denominator(), k),
                       homogenize(f.denominator(), g.numerator(), g.denominator(), k));
  if (out.degree() == 0) throw DegenerateResult("composition is constant: " + out.to_string());
  return out;
}

MobiusMap::MobiusMap(Scalar a, Scalar b, Scalar c, Scalar d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if ((a_ * d_ - b_ * c_).is_zero()) throw InvalidArgument("singular Möbius map");
  const Scalar& first = !a_.is_zero() ? a_ : b_;
  const Scalar s = first.inverse();
  a_ *= s;
  b_ *= s;
  c_ *= s;
  d_ *= s;
}

MobiusMap MobiusMap::identity(const Field& f) {
  return MobiusMap(Scalar::one(f), Scalar::zero(f), Scalar::zero(f), Scalar::one(f));
}

RationalFunction MobiusMap::as_function() const {
  return RationalFunction(Poly(a_.field(), {b_, a_}), Poly(a_.field(), {d_, c_}));
}

MobiusMap MobiusMap::inverse() const { return MobiusMap(d_, -b_, -c_, a_); }

ProjectivePoint MobiusMap::operator()(const ProjectivePoint& x) const {
  if (!x) {
    if (c_.is_zero()) return std::nullopt;
    return a_ / c_;
  }
  const Scalar den = c_ * *x + d_;
  if (den.is_zero()) return std::nullopt;
  return (a_ * *x + b_) / den;
}

std::strong_ordering operator<=>(const MobiusMap& l, const MobiusMap& r) {
  if (auto c = l.a_ <=> r.a_; c != 0) return c;
  if (auto c = l.b_ <=> r.b_; c != 0) return c;
  if (auto c = l.c_ <=> r.c_; c != 0) return c;
  return l.d_ <=> r.d_;
}

std::string MobiusMap::to_string() const { return as_function().to_string(); }

MobiusMap compose(const MobiusMap& l, const MobiusMap& m) {
  return MobiusMap(l.a() * m.a() + l.b() * m.c(), l.a() * m.b() + l.b() * m.d(),
                   l.c() * m.a() + l.d() * m.c(), l.c() * m.b() + l.d() * m.d());
}

std::vector<Poly> normalize_poly_decomposition(const Poly& f, const std::vector<RationalFunction>& factors) {
  if (f.degree() < 2) throw InvalidArgument("need a polynomial of degree at least 2");
  if (factors.empty()) throw InvalidArgument("empty decomposition");
  RationalFunction total = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) total = compose(total, factors[i]);
  if (!(total == RationalFunction::from_poly(f))) {
    throw NotAPolynomialComposite("factors compose to " + total.to_string() + ", not " + f.to_string());
  }

  std::vector<RationalFunction> work = factors;
  const Field& field = f.field();
  for (std::size_t cut = work.size(); cut-- > 1;) {
    RationalFunction right = work[cut];
    for (std::size_t j = cut + 1; j < work.size(); ++j) right = compose(right, work[j]);
    const ProjectivePoint pole = evaluate(right, std::nullopt);
    if (!pole) continue;
    // μ(X) = 1/(X − P) sends P to ∞.
    const MobiusMap mu(Scalar::zero(field), Scalar::one(field), Scalar::one(field), -*pole);
    work[cut - 1] = compose(work[cut - 1], mu.inverse().as_function());
    work[cut] = compose(mu.as_function(), work[cut]);
  }

  Decomposition d;
  for (const auto& r : work) {
    if (!r.is_polynomial()) {
      throw NotAPolynomialComposite("factor " + r.to_string() + " is not a polynomial after normalization");
    }
    d.factors.push_back(r.numerator());
  }
  d = canonicalize(d);
  if (!(d.composite() == f)) throw InternalInconsistency("normalized decomposition does not compose to f");
  return d.factors;
}

std::vector<MobiusMap> aut_search(const RationalFunction& f) {
  const Field& field = f.field();
  if (!field.is_finite() || field.size() > kMaxMobiusScanField) {
    throw InvalidArgument("Möbius scan needs a finite field with at most " +
                          std::to_string(kMaxMobiusScanField) + " elements");
  }
  if (f.degree() < 1) throw InvalidArgument("Möbius scan needs a nonconstant function");
  const auto elems = field_elements(field);
  const Scalar zero = Scalar::zero(field);
  const Scalar one = Scalar::one(field);

  std::vector<MobiusMap> out;
  auto consider = [&](const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    if ((a * d - b * c).is_zero()) return;
    const MobiusMap mu(a, b, c, d);
    if (compose(f, mu.as_function()) == f) out.push_back(mu);
  };
  for (const auto& b : elems)
    for (const auto& c : elems)
      for (const auto& d : elems) consider(one, b, c, d);
  for (const auto& c : elems)
    for (const auto& d : elems) consider(zero, one, c, d);
  std::sort(out.begin(), out.end());

  if (out.size() > static_cast<std::size_t>(f.degree())) {
    throw TheoremViolated("more automorphisms than the degree",
                          json{{"f", f.to_string()}, {"aut", out.size()}, {"degree", f.degree()}});
  }
  for (const auto& m : out) {
    for (const auto& n : out) {
      if (!std::binary_search(out.begin(), out.end(), compose(m, n))) {
        throw InternalInconsistency("automorphisms not closed under composition");
      }
    }
  }
  return out;
}

namespace {

json maps_json(const std::vector<MobiusMap>& maps) {
  json out = json::array();
  for (const auto& m : maps) out.push_back(m.to_string());
  return out;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

TheoremReport composition_aut_report(const RationalFunction& outer, const RationalFunction& inner) {
  const RationalFunction f = compose(outer, inner);
  const auto aut_f = aut_search(f);
  const auto aut_outer = aut_search(outer);
  const auto aut_inner = aut_search(inner);
  const std::size_t product = aut_outer.size() * aut_inner.size();
  const bool divides = product % aut_f.size() == 0;

  TheoremReport r;
  r.theorem = "aut-divisibility";
  r.summary = "|Aut(f)| = " + std::to_string(aut_f.size()) + (divides ? " divides " : " does not divide ") +
              std::to_string(aut_outer.size()) + "*" + std::to_string(aut_inner.size());
  r.details = json{{"field", f.field().name()},
                   {"outer", outer.to_string()},
                   {"inner", inner.to_string()},
                   {"f", f.to_string()},
                   {"aut_f", aut_f.size()},
                   {"aut_outer", aut_outer.size()},
                   {"aut_inner", aut_inner.size()},
                   {"product", product},
                   {"divides", divides},
                   {"aut_f_maps", maps_json(aut_f)},
                   {"aut_outer_maps", maps_json(aut_outer)},
                   {"aut_inner_maps", maps_json(aut_inner)}};
  return r;
}

TheoremReport counterexample_report(std::uint32_t p) {
  if (!is_prime(p) || p % 3 != 1) {
    throw BadPrime(std::to_string(p) + " is not a prime congruent to 1 mod 3");
  }
  if (p > kMaxMobiusScanField) {
    throw CapExceeded("Möbius scan is limited to p <= " + std::to_string(kMaxMobiusScanField));
  }
  const Field field = Field::prime(p);
  const RationalFunction f1(Poly::from_ints(field, {1, 0, 1}), Poly::from_ints(field, {0, 1}));
  const RationalFunction f2 = RationalFunction::from_poly(Poly::from_ints(field, {0, -3, 0, 1}));
  const RationalFunction expected(Poly::from_ints(field, {1, 0, 0, 0, 0, 0, 1}),
                                  Poly::from_ints(field, {0, 0, 0, 1}));
  if (!(compose(f2, f1) == expected)) {
    throw InternalInconsistency("X^3 - 3X composed with X + 1/X is not X^3 + X^-3");
  }

  TheoremReport r = composition_aut_report(f2, f1);
  r.theorem = "counterexample";
  const auto& d = r.details;
  const bool ok = d["aut_f"] == 6 && d["aut_outer"] == 1 && d["aut_inner"] == 2 && d["divides"] == false;
  r.details["prime"] = p;
  if (!ok) throw TheoremViolated("automorphism orders differ from (6, 1, 2)", r.details);
  r.summary = "|Aut(f)| = 6 does not divide |Aut(f2)|*|Aut(f1)| = 1*2";
  return r;
}

RationalFunction parse_ratfunc_file(std::string_view text) {
  const auto kv = parse_key_values(text);
  for (const auto& [key, value] : kv) {
    if (key != "field" && key != "num" && key != "den" && key != "name") {
      throw ParseError("unknown key '" + key + "' in rational function file");
    }
  }
  const auto field_it = kv.find("field");
  const auto num_it = kv.find("num");
  if (field_it == kv.end() || num_it == kv.end()) throw ParseError("rational function file needs field and num");
  const Field field = Field::parse(field_it->second);
  Poly num = parse_terms(field, num_it->second);
  const auto den_it = kv.find("den");
  Poly den = den_it == kv.end() ? Poly::constant(Scalar::one(field)) : parse_terms(field, den_it->second);
  if (den.is_zero()) throw ParseError("zero denominator");
  return RationalFunction(std::move(num), std::move(den));
}

}  // namespace rittlab
