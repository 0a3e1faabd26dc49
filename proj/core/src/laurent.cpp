#include "rittlab/laurent.hpp"

#include <algorithm>

#include "rittlab/error.hpp"
#include "rittlab/polyfield.hpp"

namespace rittlab {

using nlohmann::json;

LaurentPoly::LaurentPoly(Field field) : field_(std::move(field)) {}

LaurentPoly::LaurentPoly(Field field, int low, std::vector<Scalar> coeffs)
    : field_(std::move(field)), low_(low), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(const Scalar& c, int degree) {
  return LaurentPoly(c.field(), degree, {c});
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
  low_ = coeffs_.empty() ? 0 : low_ + static_cast<int>(lead);
}

Scalar LaurentPoly::coeff(int degree) const {
  if (coeffs_.empty() || degree < low_ || degree > high()) return Scalar::zero(field_);
  return coeffs_[static_cast<std::size_t>(degree - low_)];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (!(field_ == o.field_)) throw FieldMismatch("Laurent polynomials over different fields");
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  std::vector<Scalar> out(static_cast<std::size_t>(hi - lo + 1), Scalar::zero(field_));
  for (int d = low_; d <= high(); ++d) out[static_cast<std::size_t>(d - lo)] += coeff(d);
  for (int d = o.low_; d <= o.high(); ++d) out[static_cast<std::size_t>(d - lo)] += o.coeff(d);
  low_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  LaurentPoly neg = o;
  for (auto& c : neg.coeffs_) c = -c;
  return *this += neg;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch("Laurent polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.field_);
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.field_, a.low_ + b.low_, std::move(out));
}

LaurentPoly LaurentPoly::scale_variable(const Scalar& lambda) const {
  std::vector<Scalar> out = coeffs_;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] *= lambda.pow(low_ + static_cast<int>(k));
  return LaurentPoly(field_, low_, std::move(out));
}

LaurentPoly LaurentPoly::power_variable(int k) const {
  if (k < 1) throw InvalidArgument("power_variable needs k ≥ 1");
  if (is_zero()) return *this;
  std::vector<Scalar> out((coeffs_.size() - 1) * static_cast<std::size_t>(k) + 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(k)] = coeffs_[i];
  return LaurentPoly(field_, low_ * k, std::move(out));
}

LaurentPoly evaluate(const Poly& f, const LaurentPoly& x) {
  LaurentPoly acc(f.field());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = acc * x;
    if (!f.coeffs()[i].is_zero()) acc += LaurentPoly::monomial(f.coeffs()[i], 0);
  }
  return acc;
}

LaurentPoly LaurentBranch::series() const {
  const Field& field = c.field();
  // Degrees -M .. 1.
  std::vector<Scalar> coeffs;
  for (std::size_t i = tail.size(); i-- > 0;) coeffs.push_back(tail[i]);
  coeffs.push_back(c);
  return LaurentPoly(field, -static_cast<int>(precision()), std::move(coeffs));
}

namespace {

void require_branch_field(const Poly& f) {
  if (f.field().is_rational()) throw InvalidArgument("Laurent branches are computed over finite fields");
  if (f.degree() < 1) throw InvalidArgument("Laurent branches need degree at least 1");
  require_tame(f);
}

}  // namespace

std::vector<Scalar> branch_leading_coefficients(const Poly& f) {
  require_branch_field(f);
  std::vector<Scalar> out;
  for (const auto& c : field_elements(f.field())) {
    if (!c.is_zero() && (f.leading() * c.pow(f.degree())).is_one()) out.push_back(c);
  }
  return out;
}

LaurentBranch solve_branch(const Poly& f, const Scalar& c, std::size_t precision) {
  require_branch_field(f);
  if (!(c.field() == f.field())) throw FieldMismatch("leading coefficient from another field");
  const int n = f.degree();
  if (c.is_zero() || !(f.leading() * c.pow(n)).is_one()) {
    throw BadLeadingCoefficient("need lc(f)·c^n = 1, got c = " + c.to_string());
  }
  const Field& field = f.field();
  const Scalar pivot = Scalar(field, n) * f.leading() * c.pow(n - 1);
  const LaurentPoly target = LaurentPoly::monomial(Scalar::one(field), n);
  LaurentBranch b{c, {}};
  for (std::size_t i = 0; i <= precision; ++i) {
    b.tail.push_back(Scalar::zero(field));
    const LaurentPoly residual = evaluate(f, b.series()) - target;
    const Scalar e = residual.coeff(n - 1 - static_cast<int>(i));
    b.tail.back() = -e / pivot;
  }
  return b;
}

std::vector<Scalar> branch_residuals(const Poly& f, const LaurentBranch& branch) {
  const int n = f.degree();
  const LaurentPoly residual =
      evaluate(f, branch.series()) - LaurentPoly::monomial(Scalar::one(f.field()), n);
  std::vector<Scalar> out;
  for (std::size_t i = 0; i <= branch.precision(); ++i) {
    out.push_back(residual.coeff(n - 1 - static_cast<int>(i)));
  }
  return out;
}

bool verify_branch(const Poly& f, const LaurentBranch& branch) {
  const auto r = branch_residuals(f, branch);
  return std::all_of(r.begin(), r.end(), [](const Scalar& x) { return x.is_zero(); });
}

std::optional<Scalar> primitive_root_of_unity(const Field& f, std::size_t n) {
  if (f.is_rational() || n == 0) return std::nullopt;
  for (std::uint32_t code = 1; code < f.size(); ++code) {
    const Scalar x = Scalar::from_code(f, code);
    std::size_t order = 1;
    Scalar y = x;
    while (!y.is_one() && order <= n) {
      y *= x;
      ++order;
    }
    if (order == n) return x;
  }
  return std::nullopt;
}

InertiaCycle monodromy_at_infinity(const Poly& f, std::size_t precision, std::optional<Scalar> theta) {
  const auto leads = branch_leading_coefficients(f);
  const auto n = static_cast<std::size_t>(f.degree());
  if (leads.size() != n) {
    throw InvalidArgument("expected " + std::to_string(n) + " branches, found " +
                          std::to_string(leads.size()) + " (need n | q-1 and 1/lc an n-th power)");
  }
  if (!theta) theta = primitive_root_of_unity(f.field(), n);
  if (!theta) throw InvalidArgument("no primitive n-th root of unity in " + f.field().name());
  {
    std::size_t order = 1;
    Scalar y = *theta;
    while (!y.is_one() && order <= n) {
      y *= *theta;
      ++order;
    }
    if (order != n) throw InvalidArgument("theta is not a primitive n-th root of unity");
  }

  std::vector<LaurentBranch> branches;
  for (const auto& c : leads) branches.push_back(solve_branch(f, c, precision));
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar target = *theta * leads[i];
    auto it = std::find(leads.begin(), leads.end(), target);
    if (it == leads.end()) throw InternalInconsistency("θ·c is not a branch label");
    const std::size_t j = static_cast<std::size_t>(it - leads.begin());
    images[i] = static_cast<Point>(j);
    if (!(branches[i].series().scale_variable(*theta) == branches[j].series())) {
      throw TheoremViolated("x_c(θs) differs from x_{θc}(s)",
                            json{{"c", leads[i].to_string()},
                                 {"theta", theta->to_string()},
                                 {"precision", precision}});
    }
  }
  Permutation perm(images);
  if (perm.cycle_type() != std::vector<std::size_t>{n}) {
    throw InternalInconsistency("branch permutation is not an n-cycle");
  }
  return InertiaCycle{*theta, std::move(branches), std::move(perm)};
}

}  // namespace rittlab
