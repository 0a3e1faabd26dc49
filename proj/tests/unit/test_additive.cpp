#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rittlab/additive.hpp"
#include "rittlab/error.hpp"
#include "rittlab/fixtures.hpp"

namespace rittlab {
namespace {

SkewPoly sk(const Field& f, const std::vector<long long>& codes) { return SkewPoly::from_ints(f, codes); }

std::vector<std::vector<std::vector<Scalar>>> as_coeffs(const std::vector<SkewFactorization>& fs) {
  std::vector<std::vector<std::vector<Scalar>>> out;
  for (const auto& f : fs) {
    std::vector<std::vector<Scalar>> row;
    for (const auto& p : f) row.push_back(p.coeffs());
    out.push_back(row);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every skew polynomial of τ-degree 1..max_degree with nonzero leading coefficient.
std::vector<SkewPoly> all_skew(const Field& f, std::size_t max_degree) {
  const auto elems = field_elements(f);
  std::vector<SkewPoly> out;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::vector<std::size_t> digits(d + 1, 0);
    digits[d] = 1;
    while (true) {
      std::vector<Scalar> c;
      for (auto i : digits) c.push_back(elems[i]);
      out.emplace_back(f, c);
      std::size_t i = 0;
      while (i <= d && ++digits[i] == elems.size()) {
        digits[i] = i == d ? 1 : 0;
        ++i;
      }
      if (i > d) break;
    }
  }
  return out;
}

TEST(SkewCatalog, MatchesDataFiles) {
  for (const auto& f : skew_catalog()) {
    std::ifstream in(std::string(RITTLAB_DATA_DIR) + "/skew/" + f.name + ".skew");
    ASSERT_TRUE(in) << f.name;
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), f.text);
  }
}

TEST(SkewMul, Examples) {
  const auto f2 = Field::prime(2);
  EXPECT_EQ(sk(f2, {0, 1}) * sk(f2, {1, 1}), sk(f2, {0, 1, 1}));
  EXPECT_EQ(to_additive(sk(f2, {0, 1, 1})), Poly::from_ints(f2, {0, 0, 1, 0, 1}));
  const auto f4 = Field::gf4();
  const auto tau = sk(f4, {0, 1});
  const auto w = sk(f4, {2});
  EXPECT_EQ(tau * w, sk(f4, {0, 3}));  // ω² has code 3
  EXPECT_EQ(w * tau, sk(f4, {0, 2}));
  EXPECT_NE(tau * w, w * tau);
  const auto u = sk(f4, {1, 2, 3});
  EXPECT_EQ(u * sk(f4, {1}), u);
}

TEST(SkewMul, MatchesAdditiveComposition) {
  for (const auto& field : {Field::prime(2), Field::prime(3), Field::gf4(), Field::gf9()}) {
    const auto polys = all_skew(field, 2);
    for (std::size_t i = 0; i < polys.size(); i += 3)
      for (std::size_t j = 0; j < polys.size(); j += 5) {
        const auto& u = polys[i];
        const auto& v = polys[j];
        EXPECT_EQ(to_additive(u * v), compose(oracle::additive_poly(field, u.coeffs()),
                                              oracle::additive_poly(field, v.coeffs())));
      }
  }
}

TEST(SkewMul, Associative) {
  const auto f4 = Field::gf4();
  const auto polys = all_skew(f4, 2);
  for (std::size_t i = 0; i < polys.size(); i += 7)
    for (std::size_t j = 0; j < polys.size(); j += 11)
      for (std::size_t k = 0; k < polys.size(); k += 13)
        EXPECT_EQ((polys[i] * polys[j]) * polys[k], polys[i] * (polys[j] * polys[k]));
}

TEST(Additive, RoundTripAndDegree) {
  const auto f9 = Field::gf9();
  const auto u = sk(f9, {4, 0, 7});
  EXPECT_EQ(to_additive(u).degree(), 9);
  EXPECT_EQ(from_additive(to_additive(u)), u);
  EXPECT_THROW(from_additive(Poly::from_ints(f9, {0, 1, 1})), NotAdditive);
  EXPECT_THROW(SkewPoly(Field::rationals()), InvalidArgument);
}

TEST(RightDivide, Examples) {
  const auto f2 = Field::prime(2);
  const auto f = sk(f2, {0, 1, 1});
  const auto a = right_divide(f, sk(f2, {0, 1}));
  EXPECT_EQ(a.quotient, sk(f2, {1, 1}));
  EXPECT_TRUE(a.remainder.is_zero());
  const auto b = right_divide(f, sk(f2, {1, 1}));
  EXPECT_EQ(b.quotient, sk(f2, {0, 1}));
  EXPECT_TRUE(b.remainder.is_zero());
  EXPECT_FALSE(right_divide(sk(f2, {0, 0, 1}), sk(f2, {1, 1})).remainder.is_zero());
  EXPECT_THROW(right_divide(f, SkewPoly(f2)), InvalidArgument);
}

TEST(RightDivide, IdentityOnRandomInputs) {
  std::mt19937 rng(20240611);
  const auto f9 = Field::gf9();
  std::uniform_int_distribution<long long> coeff(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long long> fc(6), dc(3);
    for (auto& c : fc) c = coeff(rng);
    for (auto& c : dc) c = coeff(rng);
    fc.back() = 1 + coeff(rng) % 8;
    dc.back() = 1 + coeff(rng) % 8;
    const auto f = sk(f9, fc);
    const auto d = sk(f9, dc);
    const auto r = right_divide(f, d);
    EXPECT_EQ(r.quotient * d + r.remainder, f);
    EXPECT_LT(r.remainder.degree(), d.degree());
  }
}

TEST(Factorizations, Examples) {
  const auto f2 = Field::prime(2);
  const auto a = all_complete_skew_factorizations(sk(f2, {0, 1, 1}));
  ASSERT_EQ(a.size(), 2u);
  std::set<std::vector<std::vector<Scalar>>> got;
  for (const auto& fac : a) {
    std::vector<std::vector<Scalar>> row;
    for (const auto& p : fac) row.push_back(p.coeffs());
    got.insert(row);
  }
  const auto tau = sk(f2, {0, 1}).coeffs();
  const auto tau1 = sk(f2, {1, 1}).coeffs();
  EXPECT_EQ(got, (std::set<std::vector<std::vector<Scalar>>>{{tau1, tau}, {tau, tau1}}));

  const auto b = all_complete_skew_factorizations(sk(f2, {1, 1, 1}));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].size(), 1u);
  EXPECT_TRUE(is_irreducible(sk(f2, {1, 1, 1})));

  const auto c = all_complete_skew_factorizations(sk(f2, {0, 0, 1}));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], (SkewFactorization{sk(f2, {0, 1}), sk(f2, {0, 1})}));
}

TEST(Factorizations, IrreducibleHasNoGeneralRightFactor) {
  const auto f2 = Field::prime(2);
  const auto additive = to_additive(sk(f2, {1, 1, 1}));
  EXPECT_EQ(additive, Poly::from_ints(f2, {0, 1, 1, 0, 1}));
  EXPECT_TRUE(oracle::right_factors(additive).empty());
  EXPECT_TRUE(brute_force_right_factors(additive).empty());
}

TEST(Factorizations, MatchOracleOnSmallFields) {
  for (const auto& field : {Field::prime(2), Field::prime(3), Field::gf4()}) {
    for (const auto& f : all_skew(field, field.size() == 2 ? 3 : 2)) {
      EXPECT_EQ(as_coeffs(all_complete_skew_factorizations(f)), oracle::skew_factorizations(f.coeffs()))
          << field.name() << " " << f.to_string();
    }
  }
}

TEST(Factorizations, CatalogMatchesOracle) {
  for (const auto& entry : skew_catalog()) {
    const auto f = parse_skew_file(entry.text);
    EXPECT_EQ(as_coeffs(all_complete_skew_factorizations(f)), oracle::skew_factorizations(f.coeffs())) << entry.name;
  }
}

TEST(Factorizations, MonicRightFactorsMatchOracle) {
  const auto f4 = Field::gf4();
  for (const auto& f : all_skew(f4, 2)) {
    std::vector<std::vector<Scalar>> got;
    for (const auto& d : monic_right_factors(f, 1)) got.push_back(d.coeffs());
    std::sort(got.begin(), got.end());
    auto want = oracle::skew_right_factors(f.coeffs(), 1);
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want) << f.to_string();
  }
}

TEST(Factorizations, Caps) {
  EXPECT_THROW(all_complete_skew_factorizations(SkewPoly::tau_power(Field::prime(2), 6)), CapExceeded);
  EXPECT_THROW(all_complete_skew_factorizations(SkewPoly::tau_power(Field::prime(11), 2)), CapExceeded);
}

TEST(OreInvariance, Catalog) {
  for (const auto& entry : skew_catalog()) {
    EXPECT_EQ(verify_ore_invariance(parse_skew_file(entry.text)).status, Status::pass) << entry.name;
  }
}

TEST(OreInvariance, GeneralRightFactorDegreesArePowersOfP) {
  // Independent of the library's own search: the oracle's right factors of
  // the additive polynomial have degree p^e for some skew right factor degree e.
  for (const auto& field : {Field::prime(2), Field::gf4()}) {
    const auto p = field.characteristic();
    for (const auto& f : all_skew(field, 2)) {
      const auto additive = to_additive(f);
      std::set<std::size_t> skew_degrees;
      for (int e = 1; e < f.degree(); ++e)
        if (!monic_right_factors(f, e).empty()) skew_degrees.insert(static_cast<std::size_t>(e));
      for (const auto& h : oracle::right_factors(oracle::normalized(additive))) {
        std::size_t e = 0, q = 1;
        while (q < static_cast<std::size_t>(h.degree())) {
          q *= p;
          ++e;
        }
        EXPECT_EQ(q, static_cast<std::size_t>(h.degree())) << f.to_string();
        EXPECT_TRUE(skew_degrees.count(e)) << f.to_string();
      }
    }
  }
}

TEST(SkewFile, Parse) {
  const auto f = parse_skew_file("field: F4\nskew: 2:1 1:2\n");
  EXPECT_EQ(f, sk(Field::gf4(), {0, 2, 1}));
  EXPECT_EQ(parse_skew_file("field: F4\nskew: " + f.to_terms() + "\n"), f);
  EXPECT_THROW(parse_skew_file("field: Q\nskew: 1:1\n"), ParseError);
}

}  // namespace
}  // namespace rittlab
