#include "rittlab/fixtures.hpp"

#include "rittlab/error.hpp"

namespace rittlab {

const std::vector<Fixture>& fixture_catalog() {
  static const std::vector<Fixture> catalog{
      {"s3",
       "# S3 in its natural action\n"
       "name: s3\n"
       "degree: 3\n"
       "generators: (0 1 2), (0 1)\n"
       "H: stabilizer 2\n"
       "A: generators (0 1 2)\n"},
      {"s4",
       "# S4 in its natural action; no transitive quasi-Hamiltonian subgroup is declared\n"
       "name: s4\n"
       "degree: 4\n"
       "generators: (0 1 2 3), (0 1)\n"
       "H: stabilizer 3\n"},
      {"d6",
       "# dihedral group of order 12 on 6 points, the monodromy group of X^6\n"
       "name: d6\n"
       "degree: 6\n"
       "generators: (0 1 2 3 4 5), (1 5)(2 4)\n"
       "H: stabilizer 0\n"
       "A: generators (0 1 2 3 4 5)\n"},
      {"c6",
       "# C6 regular\n"
       "name: c6\n"
       "degree: 6\n"
       "generators: (0 1 2 3 4 5)\n"
       "H: stabilizer 0\n"
       "A: generators (0 1 2 3 4 5)\n"},
      {"q8",
       "# Q8 regular: a = (0 1 2 3)(4 5 6 7), b = (0 4 2 6)(1 7 3 5)\n"
       "name: q8\n"
       "degree: 8\n"
       "generators: (0 1 2 3)(4 5 6 7), (0 4 2 6)(1 7 3 5)\n"
       "H: stabilizer 0\n"
       "A: generators (0 1 2 3)(4 5 6 7), (0 4 2 6)(1 7 3 5)\n"},
      {"m16",
       "# M16 = <a, b | a^8 = b^2 = 1, bab^-1 = a^5> regular\n"
       "name: m16\n"
       "degree: 16\n"
       "generators: (0 1 2 3 4 5 6 7)(8 9 10 11 12 13 14 15), (0 8)(1 13)(2 10)(3 15)(4 12)(5 9)(6 14)(7 11)\n"
       "H: stabilizer 0\n"
       "A: generators (0 1 2 3 4 5 6 7)(8 9 10 11 12 13 14 15), (0 8)(1 13)(2 10)(3 15)(4 12)(5 9)(6 14)(7 11)\n"},
      {"c2",
       "# C2 regular\n"
       "name: c2\n"
       "degree: 2\n"
       "generators: (0 1)\n"
       "H: stabilizer 0\n"
       "A: generators (0 1)\n"},
      {"c3",
       "# C3 regular\n"
       "name: c3\n"
       "degree: 3\n"
       "generators: (0 1 2)\n"
       "H: stabilizer 0\n"
       "A: generators (0 1 2)\n"},
      {"c5",
       "# C5 regular\n"
       "name: c5\n"
       "degree: 5\n"
       "generators: (0 1 2 3 4)\n"
       "H: stabilizer 0\n"
       "A: generators (0 1 2 3 4)\n"},
      {"c7",
       "# C7 regular\n"
       "name: c7\n"
       "degree: 7\n"
       "generators: (0 1 2 3 4 5 6)\n"
       "H: stabilizer 0\n"
       "A: generators (0 1 2 3 4 5 6)\n"},
      {"agl1_5",
       "# AGL(1,5) acting on F5, x -> x+1 and x -> 2x\n"
       "name: agl1_5\n"
       "degree: 5\n"
       "generators: (0 1 2 3 4), (1 2 4 3)\n"
       "H: stabilizer 0\n"
       "A: generators (0 1 2 3 4)\n"},
  };
  return catalog;
}

const std::vector<Fixture>& polynomial_catalog() {
  static const std::vector<Fixture> catalog{
      {"x6",
       "# X^6, the composite of X^2 and X^3 in both orders\n"
       "name: x6\n"
       "field: Q\n"
       "poly: 6:1\n"},
      {"x4_x2",
       "# X^4 + X^2 = (X^2 + X) o X^2\n"
       "name: x4_x2\n"
       "field: Q\n"
       "poly: 4:1 2:1\n"},
      {"x4_x3",
       "# X^4 + X^3, indecomposable\n"
       "name: x4_x3\n"
       "field: Q\n"
       "poly: 4:1 3:1\n"},
      {"dickson6",
       "# Dickson polynomial D_6(X, 1)\n"
       "name: dickson6\n"
       "field: Q\n"
       "poly: 6:1 4:-6 2:9 0:-2\n"},
      {"cheb6",
       "# Chebyshev polynomial T_6\n"
       "name: cheb6\n"
       "field: Q\n"
       "poly: 6:32 4:-48 2:18 0:-1\n"},
      {"x12",
       "# X^12\n"
       "name: x12\n"
       "field: Q\n"
       "poly: 12:1\n"},
      {"x6_x2_5",
       "# X^6 + X^2 + 5\n"
       "name: x6_x2_5\n"
       "field: Q\n"
       "poly: 6:1 2:1 0:5\n"},
      {"x9_x3",
       "# X^9 + X^3\n"
       "name: x9_x3\n"
       "field: Q\n"
       "poly: 9:1 3:1\n"},
      {"comp8",
       "# (X^2 + 1) o (X^4 + X)\n"
       "name: comp8\n"
       "field: Q\n"
       "poly: 8:1 5:2 2:1 0:1\n"},
      {"half6",
       "# X^6 + X^4/2 + 1/3, non-integral coefficients\n"
       "name: half6\n"
       "field: Q\n"
       "poly: 6:1 4:1/2 0:1/3\n"},
      {"x3_f7",
       "# X^3 over F7\n"
       "name: x3_f7\n"
       "field: F7\n"
       "poly: 3:1\n"},
      {"x6_f7",
       "# X^6 over F7\n"
       "name: x6_f7\n"
       "field: F7\n"
       "poly: 6:1\n"},
      {"dickson6_f7",
       "# D_6(X, 1) reduced mod 7\n"
       "name: dickson6_f7\n"
       "field: F7\n"
       "poly: 6:1 4:1 2:2 0:5\n"},
      {"x4_x2_f5",
       "# X^4 + X^2 over F5\n"
       "name: x4_x2_f5\n"
       "field: F5\n"
       "poly: 4:1 2:1\n"},
      {"x6_f11",
       "# X^6 + 3X^3 + 2 over F11\n"
       "name: x6_f11\n"
       "field: F11\n"
       "poly: 6:1 3:3 0:2\n"},
      {"x10_f3",
       "# X^10 over F3\n"
       "name: x10_f3\n"
       "field: F3\n"
       "poly: 10:1\n"},
      {"x8_f3",
       "# X^8 + X^4 + X^2 over F3\n"
       "name: x8_f3\n"
       "field: F3\n"
       "poly: 8:1 4:1 2:1\n"},
      {"x12_f5",
       "# X^12 + X^6 over F5\n"
       "name: x12_f5\n"
       "field: F5\n"
       "poly: 12:1 6:1\n"},
      {"x4_f9",
       "# X^4 + tX^2 over F9 = F3[t]/(t^2 + 1)\n"
       "name: x4_f9\n"
       "field: F9\n"
       "poly: 4:1 2:3\n"},
  };
  return catalog;
}

const std::vector<Fixture>& skew_catalog() {
  static const std::vector<Fixture> catalog{
      {"tau2_tau_f2",
       "# tau^2 + tau over F2, two factorizations\n"
       "name: tau2_tau_f2\n"
       "field: F2\n"
       "skew: 2:1 1:1\n"},
      {"tau2_tau_1_f2",
       "# tau^2 + tau + 1 over F2, irreducible\n"
       "name: tau2_tau_1_f2\n"
       "field: F2\n"
       "skew: 2:1 1:1 0:1\n"},
      {"tau2_f2",
       "# tau^2 over F2\n"
       "name: tau2_f2\n"
       "field: F2\n"
       "skew: 2:1\n"},
      {"tau2_w_f4",
       "# tau^2 + w*tau over F4, w = t\n"
       "name: tau2_w_f4\n"
       "field: F4\n"
       "skew: 2:1 1:2\n"},
      {"tau3_f2",
       "# tau^3 + tau + 1 over F2\n"
       "name: tau3_f2\n"
       "field: F2\n"
       "skew: 3:1 1:1 0:1\n"},
      {"tau2_f3",
       "# tau^2 - 1 over F3\n"
       "name: tau2_f3\n"
       "field: F3\n"
       "skew: 2:1 0:2\n"},
  };
  return catalog;
}

const Fixture& find_fixture(std::string_view name) {
  for (const auto& f : fixture_catalog()) {
    if (f.name == name) return f;
  }
  throw InvalidArgument("unknown fixture: " + std::string(name));
}

ChainContext load_fixture(std::string_view name) {
  return ChainContext::from_spec(parse_context(find_fixture(name).text));
}

}  // namespace rittlab
