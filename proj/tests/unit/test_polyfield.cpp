#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "rittlab/error.hpp"
#include "rittlab/fixtures.hpp"
#include "rittlab/polyfield.hpp"

namespace rittlab {
namespace {

Poly q_poly(const std::vector<long long>& c) { return Poly::from_ints(Field::rationals(), c); }

std::vector<std::vector<Poly>> as_lists(const std::vector<Decomposition>& ds) {
  std::vector<std::vector<Poly>> out;
  for (const auto& d : ds) out.push_back(d.factors);
  return out;
}

std::set<std::string> keys(const std::vector<std::vector<Poly>>& ds) {
  std::set<std::string> out;
  for (const auto& d : ds) {
    std::string k;
    for (const auto& p : d) k += p.to_string() + " | ";
    out.insert(k);
  }
  return out;
}

// Primes at which a rational polynomial is checked against the finite-field
// oracle: tame, leading coefficient and denominators survive, and the
// exhaustive search stays small.
std::vector<std::uint32_t> good_primes(const Poly& f) {
  std::vector<std::uint32_t> out;
  const auto n = static_cast<std::uint32_t>(f.degree());
  for (std::uint32_t p : {5u, 7u, 11u}) {
    if (n % p == 0) continue;
    if (std::pow(static_cast<double>(p), n / 2.0 - 1) > 200000) continue;
    const auto r = oracle::reduce_mod(f, Field::prime(p));
    if (!r || r->degree() != f.degree()) continue;
    out.push_back(p);
  }
  return out;
}

std::vector<std::vector<Poly>> reduce_all(const std::vector<Decomposition>& ds, const Field& fp) {
  std::vector<std::vector<Poly>> out;
  for (const auto& d : ds) {
    std::vector<Poly> r;
    for (const auto& p : d.factors) r.push_back(*oracle::reduce_mod(p, fp));
    out.push_back(r);
  }
  return out;
}

TEST(PolyCatalog, MatchesDataFiles) {
  for (const auto& f : polynomial_catalog()) {
    std::ifstream in(std::string(RITTLAB_DATA_DIR) + "/polys/" + f.name + ".poly");
    ASSERT_TRUE(in) << f.name;
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), f.text);
  }
}

TEST(Decompositions, CorpusMatchesOracle) {
  for (const auto& entry : polynomial_catalog()) {
    const auto f = parse_poly_file(entry.text);
    ASSERT_LE(f.degree(), 12) << entry.name;
    const auto got = all_complete_decompositions(f);
    for (const auto& d : got) {
      EXPECT_EQ(d.composite(), f) << entry.name;
      EXPECT_TRUE(d.is_canonical()) << entry.name;
      EXPECT_EQ(canonicalize(d), d) << entry.name;
    }
    if (f.field().is_finite()) {
      EXPECT_EQ(keys(as_lists(got)), keys(oracle::complete_decompositions(f))) << entry.name;
      continue;
    }
    const auto primes = good_primes(f);
    ASSERT_FALSE(primes.empty()) << entry.name;
    bool equal_somewhere = false;
    for (auto p : primes) {
      const auto fp = Field::prime(p);
      const auto want = keys(oracle::complete_decompositions(*oracle::reduce_mod(f, fp)));
      const auto have = keys(reduce_all(got, fp));
      for (const auto& k : have) EXPECT_TRUE(want.count(k)) << entry.name << " mod " << p << ": " << k;
      equal_somewhere = equal_somewhere || want == have;
    }
    EXPECT_TRUE(equal_somewhere) << entry.name;
  }
}

TEST(Decompositions, AtMostOneRightFactorPerDegree) {
  for (const auto& entry : polynomial_catalog()) {
    const auto f = parse_poly_file(entry.text);
    if (!f.field().is_finite()) continue;
    const auto brute = oracle::right_factors(oracle::normalized(f));
    std::set<int> degrees;
    for (const auto& h : brute) EXPECT_TRUE(degrees.insert(h.degree()).second) << entry.name << " " << h.to_string();
    EXPECT_EQ(canonical_right_factors(f), brute) << entry.name;
  }
}

TEST(Decompositions, X6HasTwo) {
  const auto ds = all_complete_decompositions(q_poly({0, 0, 0, 0, 0, 0, 1}));
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds[0].factors, (std::vector<Poly>{q_poly({0, 0, 0, 1}), q_poly({0, 0, 1})}));
  EXPECT_EQ(ds[1].factors, (std::vector<Poly>{q_poly({0, 0, 1}), q_poly({0, 0, 0, 1})}));
}

TEST(Decompositions, X4HasOne) {
  const auto ds = all_complete_decompositions(q_poly({0, 0, 0, 0, 1}));
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].degrees(), (std::vector<int>{2, 2}));
}

TEST(Decompositions, ChebyshevSwap) {
  const auto t2 = q_poly({-2, 0, 1});
  const auto t3 = q_poly({0, -3, 0, 1});
  const auto ds = all_complete_decompositions(compose(t2, t3));
  ASSERT_EQ(ds.size(), 2u);
  std::set<std::vector<int>> degs;
  for (const auto& d : ds) {
    degs.insert(d.degrees());
    EXPECT_EQ(d.composite(), compose(t2, t3));
  }
  EXPECT_EQ(degs, (std::set<std::vector<int>>{{2, 3}, {3, 2}}));
}

TEST(RightFactor, Examples) {
  const auto x6 = q_poly({0, 0, 0, 0, 0, 0, 1});
  const auto a = right_factor(x6, 2);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->g, q_poly({0, 0, 0, 1}));
  EXPECT_EQ(a->h, q_poly({0, 0, 1}));

  const auto b = right_factor(q_poly({0, 0, 1, 0, 1}), 2);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->g, q_poly({0, 1, 1}));
  EXPECT_EQ(b->h, q_poly({0, 0, 1}));

  const auto x4x3 = q_poly({0, 0, 0, 1, 1});
  EXPECT_FALSE(right_factor(x4x3, 2));
  // No right factor modulo any good prime either.
  for (auto p : good_primes(x4x3)) {
    EXPECT_TRUE(oracle::right_factors(*oracle::reduce_mod(x4x3, Field::prime(p))).empty()) << p;
  }
  EXPECT_THROW(right_factor(x6, 4), InvalidArgument);
  EXPECT_THROW(right_factor(Poly::from_ints(Field::prime(3), {0, 0, 0, 0, 0, 0, 1}), 2), WildCharacteristic);
}

TEST(RightFactor, ComposesBack) {
  const auto g = q_poly({1, -2, 0, 3});
  const auto h = q_poly({0, 5, 1, 1});
  const auto f = compose(g, h) * Scalar(Field::rationals(), 7);
  const auto r = right_factor(f, 3);
  ASSERT_TRUE(r);
  EXPECT_EQ(compose(r->g, r->h), f);
  EXPECT_EQ(r->h, h);
}

std::vector<LinearPoly> brute_aut(const Poly& f) {
  const Field& field = f.field();
  std::vector<LinearPoly> out;
  const auto elems = field_elements(field);
  for (const auto& a : elems) {
    if (a.is_zero()) continue;
    for (const auto& b : elems) {
      const LinearPoly mu{a, b};
      bool ok = true;
      if (field.size() > static_cast<std::uint32_t>(f.degree())) {
        for (const auto& x : elems) ok = ok && f(mu(x)) == f(x);
      } else {
        ok = compose(f, mu.as_poly()) == f;
      }
      if (ok) out.push_back(mu);
    }
  }
  return out;
}

TEST(AutGroup, FiniteFieldsMatchBruteForce) {
  for (const auto& entry : polynomial_catalog()) {
    const auto f = parse_poly_file(entry.text);
    if (!f.field().is_finite()) continue;
    EXPECT_EQ(aut_group(f), brute_aut(f)) << entry.name;
  }
}

TEST(AutGroup, Examples) {
  EXPECT_EQ(aut_group(q_poly({0, 0, 1})).size(), 2u);
  EXPECT_EQ(aut_group(q_poly({0, -3, 0, 1})).size(), 1u);
  const auto f7 = Field::prime(7);
  const auto x3 = aut_group(Poly::from_ints(f7, {0, 0, 0, 1}));
  ASSERT_EQ(x3.size(), 3u);
  EXPECT_EQ(x3[0].a, Scalar(f7, 1));
  EXPECT_EQ(x3[1].a, Scalar(f7, 2));
  EXPECT_EQ(x3[2].a, Scalar(f7, 4));
}

TEST(AutGroup, IsAGroupBoundedByDegree) {
  for (const auto& entry : polynomial_catalog()) {
    const auto f = parse_poly_file(entry.text);
    const auto aut = aut_group(f);
    EXPECT_LE(aut.size(), static_cast<std::size_t>(f.degree())) << entry.name;
    const std::set<LinearPoly> set(aut.begin(), aut.end());
    for (const auto& m : aut) {
      EXPECT_EQ(compose(f, m.as_poly()), f) << entry.name;
      EXPECT_TRUE(set.count(m.inverse()));
      for (const auto& l : aut) EXPECT_TRUE(set.count(compose(l, m)));
    }
  }
}

TEST(AutGroup, RationalAutsSurviveReduction) {
  for (const auto& entry : polynomial_catalog()) {
    const auto f = parse_poly_file(entry.text);
    if (f.field().is_finite()) continue;
    for (auto p : good_primes(f)) {
      const auto fp = Field::prime(p);
      const auto reduced = brute_aut(*oracle::reduce_mod(f, fp));
      const std::set<LinearPoly> mod_p(reduced.begin(), reduced.end());
      for (const auto& m : aut_group(f)) {
        const LinearPoly r{oracle::reduce_mod(Poly::constant(m.a), fp)->coeff(0),
                           oracle::reduce_mod(Poly::constant(m.b), fp)->coeff(0)};
        EXPECT_TRUE(mod_p.count(r)) << entry.name;
      }
    }
  }
}

TEST(GammaOrder, Examples) {
  EXPECT_TRUE(gamma_order(q_poly({0, 0, 0, 0, 0, 0, 1})).infinite);
  const auto t6 = gamma_order(q_poly({-2, 0, 9, 0, -6, 0, 1}));
  EXPECT_FALSE(t6.infinite);
  EXPECT_EQ(t6.order, 2u);
  const auto g = gamma_order(q_poly({0, 0, 0, 1, 1}));
  EXPECT_FALSE(g.infinite);
  EXPECT_EQ(g.order, 1u);
}

TEST(GammaOrder, InvariantUnderLinearTwists) {
  const auto q = Field::rationals();
  const std::vector<std::pair<LinearPoly, LinearPoly>> twists{
      {{Scalar(q, 2), Scalar(q, 1)}, {Scalar(q, 1), Scalar(q, 3)}},
      {{Scalar(q, -1), Scalar(q, 5)}, {Scalar::parse(q, "1/2"), Scalar(q, -1)}},
      {{Scalar(q, 7), Scalar(q, 0)}, {Scalar(q, -3), Scalar::parse(q, "2/3")}},
  };
  for (const auto& entry : polynomial_catalog()) {
    const auto f = parse_poly_file(entry.text);
    if (f.field().is_finite()) continue;
    const auto base = gamma_order(f);
    for (const auto& [l, m] : twists) {
      const auto t = gamma_order(compose(l.as_poly(), compose(f, m.as_poly())));
      EXPECT_EQ(t.infinite, base.infinite) << entry.name;
      EXPECT_EQ(t.order, base.order) << entry.name;
    }
  }
}

TEST(GammaGroup, FiniteFieldBruteForce) {
  // μ ∈ Γ(f) iff f∘μ = ν∘f for some linear ν; ν is then read off from the
  // leading and constant coefficients.
  for (const auto& entry : polynomial_catalog()) {
    const auto f = parse_poly_file(entry.text);
    if (!f.field().is_finite()) continue;
    std::size_t count = 0;
    for (const auto& a : field_elements(f.field())) {
      if (a.is_zero()) continue;
      for (const auto& b : field_elements(f.field())) {
        const auto fm = compose(f, LinearPoly{a, b}.as_poly());
        const auto c = fm.leading() / f.leading();
        const auto d = fm.coeff(0) - c * f.coeff(0);
        if (fm == compose(LinearPoly{c, d}.as_poly(), f)) ++count;
      }
    }
    EXPECT_EQ(gamma_group(f).size(), count) << entry.name;
  }
}

TEST(FactorableCore, Examples) {
  const auto a = factorable_core(q_poly({0, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(a.h, q_poly({0, 0, 1}));
  EXPECT_EQ(a.g, q_poly({0, 0, 0, 1}));
  const auto c3 = q_poly({0, -3, 0, 1});
  const auto b = factorable_core(c3);
  EXPECT_EQ(b.g, c3);
  EXPECT_EQ(b.h, Poly::x(Field::rationals()));
  const auto c = factorable_core(q_poly({0, 0, 1, 0, 1}));
  EXPECT_EQ(c.h, q_poly({0, 0, 1}));
  EXPECT_EQ(c.g, q_poly({0, 1, 1}));
  for (const auto& entry : polynomial_catalog()) {
    const auto f = parse_poly_file(entry.text);
    const auto core = factorable_core(f);
    EXPECT_EQ(compose(core.g, core.h), f) << entry.name;
    EXPECT_EQ(static_cast<std::size_t>(core.h.degree()), aut_group(f).size()) << entry.name;
  }
}

TEST(IsFactorable, Examples) {
  EXPECT_TRUE(is_factorable(q_poly({0, 0, 1})));
  EXPECT_TRUE(is_factorable(Poly::from_ints(Field::prime(7), {0, 0, 0, 1})));
  EXPECT_FALSE(is_factorable(q_poly({0, 0, 0, 1})));
}

TEST(IsFactorable, MatchesPointCount) {
  // Over F_q with q > deg f, f(x) = f(y) ⟺ y ∈ Aut(f)·x holds for all x, y
  // exactly when f is factorable.
  for (const auto& entry : polynomial_catalog()) {
    const auto f = parse_poly_file(entry.text);
    if (!f.field().is_finite() || f.field().size() <= static_cast<std::uint32_t>(f.degree())) continue;
    const auto aut = aut_group(f);
    bool holds = aut.size() == static_cast<std::size_t>(f.degree());
    // f(X) − f(Y) vanishes on the graph of each μ; compare fibre sizes.
    const auto elems = field_elements(f.field());
    for (const auto& x : elems) {
      std::set<Scalar> fibre, orbit;
      for (const auto& y : elems)
        if (f(y) == f(x)) fibre.insert(y);
      for (const auto& m : aut) orbit.insert(m(x));
      if (fibre != orbit) holds = false;
    }
    if (is_factorable(f)) {
      EXPECT_TRUE(holds) << entry.name;
    }
  }
}

TEST(PolyTheorems, PassOnCorpus) {
  for (const auto& entry : polynomial_catalog()) {
    const auto f = parse_poly_file(entry.text);
    EXPECT_EQ(verify_poly_theorems(f).status, Status::pass) << entry.name;
  }
  EXPECT_EQ(verify_poly_theorems(q_poly({0, 0, 0, 1, 1})).status, Status::pass);
}

TEST(PolyTheorems, X12AgreesOnMultiset) {
  const auto ds = all_complete_decompositions(power(Field::rationals(), 12));
  ASSERT_FALSE(ds.empty());
  for (const auto& d : ds) {
    auto degs = d.degrees();
    std::sort(degs.begin(), degs.end());
    EXPECT_EQ(degs, (std::vector<int>{2, 2, 3}));
  }
}

TEST(Constructors, Dickson) {
  const auto q = Field::rationals();
  const auto one = Scalar::one(q);
  EXPECT_EQ(dickson(q, 2, one), q_poly({-2, 0, 1}));
  EXPECT_EQ(dickson(q, 6, one), compose(dickson(q, 2, one), dickson(q, 3, one)));
  EXPECT_EQ(dickson(q, 6, one), compose(dickson(q, 3, one), dickson(q, 2, one)));
  EXPECT_EQ(chebyshev_normalized(q, 6), dickson(q, 6, one));
  EXPECT_EQ(power(q, 1), Poly::x(q));
}

TEST(Constructors, DicksonFunctionalEquation) {
  // D_n(y + a/y) = y^n + (a/y)^n.
  const auto f = Field::prime(13);
  for (const auto& a : field_elements(f)) {
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto d = dickson(f, n, a);
      for (const auto& y : field_elements(f)) {
        if (y.is_zero()) continue;
        const auto z = a / y;
        EXPECT_EQ(d(y + z), y.pow(static_cast<long long>(n)) + z.pow(static_cast<long long>(n)));
      }
    }
  }
}

TEST(Canonicalize, EquivalentDecompositionsCollapse) {
  const auto q = Field::rationals();
  const LinearPoly mu{Scalar(q, 3), Scalar(q, -2)};
  const auto g = q_poly({1, 0, 0, 1});
  const auto h = q_poly({0, 0, 1});
  const Decomposition plain{{g, h}};
  const Decomposition twisted{{compose(g, mu.inverse().as_poly()), compose(mu.as_poly(), h)}};
  EXPECT_EQ(twisted.composite(), plain.composite());
  EXPECT_EQ(canonicalize(twisted), canonicalize(plain));
}

}  // namespace
}  // namespace rittlab
