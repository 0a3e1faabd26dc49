#include "rittlab/polyfield.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "rittlab/error.hpp"

namespace rittlab {

using nlohmann::json;

Poly Decomposition::composite() const {
  if (factors.empty()) throw InvalidArgument("empty decomposition");
  Poly acc = factors.back();
  for (std::size_t i = factors.size() - 1; i-- > 0;) acc = compose(factors[i], acc);
  return acc;
}

std::vector<int> Decomposition::degrees() const {
  std::vector<int> out;
  for (const auto& f : factors) out.push_back(f.degree());
  return out;
}

bool Decomposition::is_canonical() const {
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (!factors[i].leading().is_one() || !factors[i].coeff(0).is_zero()) return false;
  }
  return true;
}

Poly normalize(const Poly& f) {
  if (f.degree() < 1) throw InvalidArgument("cannot normalize a constant");
  Poly g = f - Poly::constant(f.coeff(0));
  return g.monic();
}

Decomposition canonicalize(const Decomposition& d) {
  if (d.factors.empty()) throw InvalidArgument("empty decomposition");
  Decomposition out = d;
  for (std::size_t i = out.factors.size(); i-- > 1;) {
    auto& inner = out.factors[i];
    if (inner.degree() < 1) throw InvalidArgument("decomposition factor of degree 0");
    // inner = mu⁻¹ ∘ normalize(inner) with mu(Y) = (Y − inner(0)) / lc.
    const LinearPoly mu_inv{inner.leading(), inner.coeff(0)};
    inner = normalize(inner);
    out.factors[i - 1] = compose(out.factors[i - 1], mu_inv.as_poly());
  }
  return out;
}

void require_tame(const Poly& f) {
  const auto p = f.field().characteristic();
  if (p != 0 && f.degree() > 0 && static_cast<std::uint32_t>(f.degree()) % p == 0) {
    throw WildCharacteristic("characteristic " + std::to_string(p) + " divides degree " +
                             std::to_string(f.degree()));
  }
}

std::optional<CompositionPair> right_factor(const Poly& f, std::size_t r) {
  const int n = f.degree();
  if (r < 2 || n < 0 || static_cast<std::size_t>(n) % r != 0 || static_cast<std::size_t>(n) / r < 2) {
    throw InvalidArgument("right factor degree must be a proper divisor of deg f");
  }
  require_tame(f);
  const Field& field = f.field();
  const std::size_t s = static_cast<std::size_t>(n) / r;
  const Poly F = normalize(f);
  const Scalar s_inv = Scalar(field, static_cast<long long>(s)).inverse();

  // h = X^r + h_{r-1} X^{r-1} + ... + h_1 X. The coefficient of X^{n-k} in
  // h^s is s·h_{r-k} plus terms in h_{r-1}, ..., h_{r-k+1}.
  std::vector<Scalar> h(r + 1, Scalar::zero(field));
  h[r] = Scalar::one(field);
  for (std::size_t k = 1; k < r; ++k) {
    const Poly partial = pow(Poly(field, h), s);
    const std::size_t deg = static_cast<std::size_t>(n) - k;
    h[r - k] = (F.coeff(deg) - partial.coeff(deg)) * s_inv;
  }
  Poly hp(field, std::move(h));
  auto g = left_cofactor(f, hp);
  if (!g) return std::nullopt;
  return CompositionPair{std::move(*g), std::move(hp)};
}

std::vector<Poly> canonical_right_factors(const Poly& f) {
  require_tame(f);
  std::vector<Poly> out;
  const int n = f.degree();
  for (int r = 2; 2 * r <= n; ++r) {
    if (n % r != 0) continue;
    if (auto pair = right_factor(f, static_cast<std::size_t>(r))) out.push_back(std::move(pair->h));
  }
  return out;
}

std::vector<Decomposition> all_complete_decompositions(const Poly& f) {
  if (f.degree() < 2) throw InvalidArgument("decomposition needs degree at least 2");
  require_tame(f);
  const Field& field = f.field();
  // Nodes: X, the canonical right factors, and f itself (last).
  std::vector<Poly> nodes{Poly::x(field)};
  for (auto& h : canonical_right_factors(f)) nodes.push_back(std::move(h));
  nodes.push_back(f);
  const std::size_t m = nodes.size();
  const std::size_t top = m - 1;

  // below[i][j]: nodes[j] is a right composition factor of nodes[i] (j ≠ i).
  std::vector<std::vector<bool>> below(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const int di = nodes[i].degree();
      const int dj = nodes[j].degree();
      if (j == i || dj >= di || di % dj != 0) continue;
      below[i][j] = j == 0 || i == top || left_cofactor(nodes[i], nodes[j]).has_value();
    }
  }
  std::vector<std::vector<std::size_t>> covers(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!below[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < m && cover; ++k) cover = !(below[i][k] && below[k][j]);
      if (cover) covers[i].push_back(j);
    }
  }

  std::vector<Decomposition> out;
  std::vector<std::size_t> path{top};
  std::function<void(std::size_t)> descend = [&](std::size_t v) {
    if (v == 0) {
      Decomposition d;
      for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        auto g = left_cofactor(nodes[path[k]], nodes[path[k + 1]]);
        if (!g) throw InternalInconsistency("right factor lost its cofactor");
        d.factors.push_back(std::move(*g));
      }
      if (!(d.composite() == f)) throw InternalInconsistency("decomposition does not recompose");
      out.push_back(std::move(d));
      return;
    }
    for (std::size_t w : covers[v]) {
      path.push_back(w);
      descend(w);
      path.pop_back();
    }
  };
  descend(top);
  return out;
}

namespace {

std::vector<LinearPoly> scan_linear(const Field& field,
                                    const std::function<bool(const LinearPoly&)>& accept) {
  std::vector<LinearPoly> out;
  const auto elements = field_elements(field);
  for (const auto& a : elements) {
    if (a.is_zero()) continue;
    for (const auto& b : elements) {
      LinearPoly mu{a, b};
      if (accept(mu)) out.push_back(mu);
    }
  }
  return out;
}

// Elements a of a finite field with a^n = 1, by scanning the multiplicative group.
std::vector<Scalar> roots_of_unity(const Field& field, std::size_t n) {
  constexpr std::uint32_t kMaxScan = 1u << 20;
  if (field.size() > kMaxScan) {
    throw CapExceeded("roots of unity are only searched in fields of at most 2^20 elements");
  }
  std::vector<Scalar> out;
  for (std::uint32_t c = 1; c < field.size(); ++c) {
    Scalar a = Scalar::from_code(field, c);
    if (a.pow(static_cast<long long>(n)).is_one()) out.push_back(a);
  }
  return out;
}

}  // namespace

std::vector<LinearPoly> aut_group(const Poly& f) {
  const int n = f.degree();
  if (n < 2) throw InvalidArgument("Aut needs degree at least 2");
  const Field& field = f.field();
  auto fixes = [&](const LinearPoly& mu) { return compose(f, mu.as_poly()) == f; };
  std::vector<LinearPoly> out;
  if (field.is_finite() && field.size() <= kMaxAutScanField) {
    out = scan_linear(field, fixes);
  } else {
    require_tame(f);
    std::vector<Scalar> candidates;
    if (field.is_rational()) {
      candidates.push_back(Scalar::one(field));
      if (n % 2 == 0) candidates.push_back(-Scalar::one(field));
    } else {
      candidates = roots_of_unity(field, static_cast<std::size_t>(n));
    }
    // The X^{n-1} coefficient of f(aX + b) is a^{n-1}(n·lc·b + c_{n-1}).
    const Scalar lc = f.leading();
    const Scalar c1 = f.coeff(static_cast<std::size_t>(n - 1));
    const Scalar n_lc = Scalar(field, n) * lc;
    for (const auto& a : candidates) {
      const Scalar a_pow = a.pow(n - 1);
      const Scalar b = (c1 - c1 * a_pow) / (n_lc * a_pow);
      LinearPoly mu{a, b};
      if (fixes(mu)) out.push_back(mu);
    }
  }
  std::sort(out.begin(), out.end());
  if (out.size() > static_cast<std::size_t>(n)) {
    throw InternalInconsistency("|Aut(f)| exceeds deg f");
  }
  return out;
}

GammaOrder gamma_order(const Poly& f) {
  const int n = f.degree();
  if (n < 2) throw InvalidArgument("Γ needs degree at least 2");
  require_tame(f);
  const Field& field = f.field();
  const Scalar beta = -f.coeff(static_cast<std::size_t>(n - 1)) / (Scalar(field, n) * f.leading());
  const Poly shifted = compose(f, LinearPoly{Scalar::one(field), beta}.as_poly());
  std::size_t m = 0;
  for (int i = 1; i < n; ++i) {
    if (!shifted.coeff(static_cast<std::size_t>(i)).is_zero()) {
      m = std::gcd(m, static_cast<std::size_t>(n - i));
    }
  }
  if (m == 0) return GammaOrder{true, 0};
  return GammaOrder{false, m};
}

std::vector<LinearPoly> gamma_group(const Poly& f) {
  const Field& field = f.field();
  if (field.is_rational() || field.size() > kMaxAutScanField) {
    throw CapExceeded("Γ(f) is enumerated only over finite fields of at most " +
                      std::to_string(kMaxAutScanField) + " elements");
  }
  if (f.degree() < 2) throw InvalidArgument("Γ needs degree at least 2");
  // μ ∈ Γ(f) iff f∘μ = u·f + v for some u ≠ 0 and v.
  auto out = scan_linear(field, [&](const LinearPoly& mu) {
    const Poly g = compose(f, mu.as_poly());
    const Scalar u = g.leading() / f.leading();
    return (g - f * u).degree() <= 0;
  });
  std::sort(out.begin(), out.end());
  return out;
}

CompositionPair factorable_core(const Poly& f) {
  const auto aut = aut_group(f);
  const Field& field = f.field();
  Poly prod = Poly::constant(Scalar::one(field));
  for (const auto& mu : aut) prod *= mu.as_poly();
  Poly h = normalize(prod);
  auto g = left_cofactor(f, h);
  if (!g) throw InternalInconsistency("f is not a polynomial in its Aut(f)-invariant");
  return CompositionPair{std::move(*g), std::move(h)};
}

bool is_factorable(const Poly& f) {
  const int n = f.degree();
  if (n < 2) throw InvalidArgument("is_factorable needs degree at least 2");
  if (n > kMaxFactorableDegree) {
    throw CapExceeded("is_factorable is limited to degree " + std::to_string(kMaxFactorableDegree));
  }
  const auto aut = aut_group(f);
  if (aut.size() != static_cast<std::size_t>(n)) return false;
  const Field& field = f.field();
  const auto N = static_cast<std::size_t>(n);
  using Bivariate = std::vector<std::vector<Scalar>>;  // [i][j] ↦ X^i Y^j
  Bivariate lhs(N + 1, std::vector<Scalar>(N + 1, Scalar::zero(field)));
  for (std::size_t i = 0; i <= N; ++i) {
    lhs[i][0] += f.coeff(i);
    lhs[0][i] -= f.coeff(i);
  }
  // Running product in X of degree ≤ k and Y of degree ≤ k.
  Bivariate rhs(N + 1, std::vector<Scalar>(N + 1, Scalar::zero(field)));
  rhs[0][0] = f.leading();
  std::size_t k = 0;
  for (const auto& mu : aut) {
    // Multiply by X − a·Y − b.
    Bivariate next(N + 1, std::vector<Scalar>(N + 1, Scalar::zero(field)));
    for (std::size_t i = 0; i <= k; ++i) {
      for (std::size_t j = 0; i + j <= k; ++j) {
        const Scalar& c = rhs[i][j];
        if (c.is_zero()) continue;
        next[i + 1][j] += c;
        next[i][j + 1] -= c * mu.a;
        next[i][j] -= c * mu.b;
      }
    }
    rhs = std::move(next);
    ++k;
  }
  return lhs == rhs;
}

namespace {

std::size_t product_of(const std::vector<std::size_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::size_t{1}, std::multiplies<>());
}

}  // namespace

TheoremReport verify_poly_theorems(const Poly& f) {
  const auto decs = all_complete_decompositions(f);
  const std::size_t aut_f = aut_group(f).size();
  using Pair = std::pair<int, std::size_t>;
  std::optional<std::vector<int>> expected_degrees;
  std::optional<std::vector<Pair>> expected_pairs;
  json listed = json::array();
  for (const auto& d : decs) {
    std::vector<int> degrees = d.degrees();
    std::vector<std::size_t> auts;
    json factors = json::array();
    for (const auto& g : d.factors) {
      auts.push_back(aut_group(g).size());
      factors.push_back(g.to_string());
    }
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < degrees.size(); ++i) pairs.emplace_back(degrees[i], auts[i]);
    listed.push_back(json{{"factors", factors}, {"degrees", degrees}, {"aut_orders", auts}});
    std::sort(degrees.begin(), degrees.end());
    std::sort(pairs.begin(), pairs.end());
    if (!expected_degrees) {
      expected_degrees = degrees;
      expected_pairs = pairs;
    } else if (degrees != *expected_degrees || pairs != *expected_pairs) {
      throw TheoremViolated("complete decompositions disagree on (degree, |Aut|)",
                            json{{"f", f.to_string()}, {"decompositions", listed}});
    }
    if (product_of(auts) % aut_f != 0) {
      throw TheoremViolated("|Aut(f)| does not divide the product over the factors",
                            json{{"f", f.to_string()}, {"aut", aut_f}, {"decomposition", listed.back()}});
    }
  }
  TheoremReport r;
  r.theorem = "poly";
  std::ostringstream os;
  os << decs.size() << " complete decompositions, degrees {";
  for (std::size_t i = 0; i < expected_degrees->size(); ++i) {
    os << (i ? "," : "") << (*expected_degrees)[i];
  }
  os << "}";
  r.summary = os.str();
  r.details = json{{"f", f.to_string()}, {"aut", aut_f}, {"decompositions", listed}};
  return r;
}

Poly power(const Field& f, std::size_t n) { return Poly::monomial(Scalar::one(f), n); }

Poly dickson(const Field& f, std::size_t n, const Scalar& a) {
  Poly prev = Poly::constant(Scalar(f, 2));
  if (n == 0) return prev;
  Poly cur = Poly::x(f);
  const Poly x = Poly::x(f);
  for (std::size_t i = 1; i < n; ++i) {
    Poly next = x * cur - prev * a;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly chebyshev_normalized(const Field& f, std::size_t n) { return dickson(f, n, Scalar::one(f)); }

}  // namespace rittlab
