#include "rittlab/small_groups.hpp"

#include <numeric>

#include "rittlab/error.hpp"

namespace rittlab {

CayleyTable cyclic_table(std::size_t n) {
  CayleyTable t;
  t.order = n;
  t.product.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t.product[a][b] = (a + b) % n;
  }
  if (n > 1) t.generators = {1};
  return t;
}

CayleyTable metacyclic_table(std::size_t m, std::size_t n, std::size_t r, std::size_t s) {
  std::size_t r_pow_n = 1;
  for (std::size_t i = 0; i < n; ++i) r_pow_n = r_pow_n * r % m;
  if (r_pow_n != 1 % m || (s * (r + m - 1)) % m != 0) {
    throw InvalidArgument("inconsistent metacyclic parameters");
  }
  std::vector<std::size_t> r_pow(n, 1);
  for (std::size_t j = 1; j < n; ++j) r_pow[j] = r_pow[j - 1] * r % m;

  CayleyTable t;
  t.order = m * n;
  t.product.assign(t.order, std::vector<std::size_t>(t.order));
  for (std::size_t x = 0; x < t.order; ++x) {
    const std::size_t i = x % m, j = x / m;
    for (std::size_t y = 0; y < t.order; ++y) {
      const std::size_t k = y % m, l = y / m;
      // a^i b^j a^k b^l = a^{i + k r^j} b^{j+l}, and b^n = a^s.
      std::size_t e = (i + k * r_pow[j]) % m;
      std::size_t f = j + l;
      if (f >= n) {
        f -= n;
        e = (e + s) % m;
      }
      t.product[x][y] = e + m * f;
    }
  }
  if (m > 1) t.generators.push_back(1);
  if (n > 1) t.generators.push_back(m);
  return t;
}

CayleyTable direct_product_table(const CayleyTable& a, const CayleyTable& b) {
  CayleyTable t;
  t.order = a.order * b.order;
  t.product.assign(t.order, std::vector<std::size_t>(t.order));
  for (std::size_t x = 0; x < t.order; ++x) {
    for (std::size_t y = 0; y < t.order; ++y) {
      t.product[x][y] = a.product[x % a.order][y % a.order] +
                        a.order * b.product[x / a.order][y / a.order];
    }
  }
  for (std::size_t g : a.generators) t.generators.push_back(g);
  for (std::size_t g : b.generators) t.generators.push_back(a.order * g);
  return t;
}

CayleyTable semidirect_cyclic_table(const CayleyTable& n, std::size_t k,
                                    const std::vector<std::size_t>& automorphism) {
  // phi_pow[i] = automorphism^i
  std::vector<std::vector<std::size_t>> phi_pow(k, std::vector<std::size_t>(n.order));
  std::iota(phi_pow[0].begin(), phi_pow[0].end(), std::size_t{0});
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t x = 0; x < n.order; ++x) phi_pow[i][x] = automorphism[phi_pow[i - 1][x]];
  }
  for (std::size_t x = 0; x < n.order; ++x) {
    if (automorphism[phi_pow[k - 1][x]] != x) {
      throw InvalidArgument("automorphism order does not divide k");
    }
    for (std::size_t y = 0; y < n.order; ++y) {
      if (automorphism[n.product[x][y]] != n.product[automorphism[x]][automorphism[y]]) {
        throw InvalidArgument("map is not an automorphism");
      }
    }
  }

  CayleyTable t;
  t.order = n.order * k;
  t.product.assign(t.order, std::vector<std::size_t>(t.order));
  for (std::size_t x = 0; x < t.order; ++x) {
    const std::size_t a = x % n.order, i = x / n.order;
    for (std::size_t y = 0; y < t.order; ++y) {
      const std::size_t b = y % n.order, j = y / n.order;
      t.product[x][y] = n.product[a][phi_pow[i][b]] + n.order * ((i + j) % k);
    }
  }
  t.generators = n.generators;
  if (k > 1) t.generators.push_back(n.order);
  return t;
}

Permutation regular_permutation(const CayleyTable& t, std::size_t g) {
  std::vector<Point> images(t.order);
  for (std::size_t x = 0; x < t.order; ++x) images[x] = static_cast<Point>(t.product[g][x]);
  return Permutation(std::move(images));
}

PermutationGroup regular_representation(const CayleyTable& t) {
  std::vector<Permutation> gens;
  for (std::size_t g : t.generators) gens.push_back(regular_permutation(t, g));
  return PermutationGroup::close(t.order, std::move(gens));
}

namespace {

std::vector<SmallGroupEntry> build_table() {
  auto c = cyclic_table;
  auto cross = direct_product_table;
  const auto c2 = c(2), c4 = c(4);
  const auto v4 = cross(c2, c2);

  // C4 × C2 with elements a^i b^j at index i + 4j.
  const auto c4c2 = cross(c4, c2);
  std::vector<std::size_t> a_to_ab(8), b_to_a2b(8);
  for (std::size_t x = 0; x < 8; ++x) {
    const std::size_t i = x % 4, j = x / 4;
    a_to_ab[x] = i + 4 * ((i + j) % 2);
    b_to_a2b[x] = (i + 2 * j) % 4 + 4 * j;
  }

  std::vector<std::pair<std::string, CayleyTable>> raw = {
      {"C1", c(1)},
      {"C2", c(2)},
      {"C3", c(3)},
      {"C4", c(4)},
      {"C2^2", v4},
      {"C5", c(5)},
      {"C6", c(6)},
      {"S3", metacyclic_table(3, 2, 2, 0)},
      {"C7", c(7)},
      {"C8", c(8)},
      {"C2xC4", cross(c2, c4)},
      {"C2^3", cross(v4, c2)},
      {"D8", metacyclic_table(4, 2, 3, 0)},
      {"Q8", metacyclic_table(4, 2, 3, 2)},
      {"C9", c(9)},
      {"C3xC3", cross(c(3), c(3))},
      {"C10", c(10)},
      {"D10", metacyclic_table(5, 2, 4, 0)},
      {"C11", c(11)},
      {"C12", c(12)},
      {"C2xC6", cross(c2, c(6))},
      {"D12", metacyclic_table(6, 2, 5, 0)},
      {"C3:C4", metacyclic_table(6, 2, 5, 3)},
      {"A4", semidirect_cyclic_table(v4, 3, {0, 2, 3, 1})},
      {"C13", c(13)},
      {"C14", c(14)},
      {"D14", metacyclic_table(7, 2, 6, 0)},
      {"C15", c(15)},
      {"C16", c(16)},
      {"C4xC4", cross(c4, c4)},
      {"(C4xC2):C2", semidirect_cyclic_table(c4c2, 2, a_to_ab)},
      {"C4:C4", metacyclic_table(4, 4, 3, 0)},
      {"C2xC8", cross(c2, c(8))},
      {"M16", metacyclic_table(8, 2, 5, 0)},
      {"D16", metacyclic_table(8, 2, 7, 0)},
      {"QD16", metacyclic_table(8, 2, 3, 0)},
      {"Q16", metacyclic_table(8, 2, 7, 4)},
      {"C2xC2xC4", cross(v4, c4)},
      {"C2xD8", cross(c2, metacyclic_table(4, 2, 3, 0))},
      {"C2xQ8", cross(c2, metacyclic_table(4, 2, 3, 2))},
      {"C4oD8", semidirect_cyclic_table(c4c2, 2, b_to_a2b)},
      {"C2^4", cross(v4, v4)},
  };

  std::vector<SmallGroupEntry> out;
  out.reserve(raw.size());
  for (auto& [label, table] : raw) out.push_back({label, regular_representation(table)});
  return out;
}

}  // namespace

const std::vector<SmallGroupEntry>& small_group_table() {
  static const std::vector<SmallGroupEntry> table = build_table();
  return table;
}

std::optional<std::string> identify_small_group(const PermutationGroup& g) {
  if (g.order() > 16) return std::nullopt;
  for (const auto& entry : small_group_table()) {
    if (entry.group.order() == g.order() && abstractly_isomorphic(entry.group, g)) {
      return entry.label;
    }
  }
  throw InternalInconsistency("group of order " + std::to_string(g.order()) +
                              " missing from the small-group table");
}

std::string group_type_label(const PermutationGroup& g) {
  if (auto label = identify_small_group(g)) return *label;
  return "order " + std::to_string(g.order()) + (is_abelian(g) ? " abelian" : " nonabelian");
}

}  // namespace rittlab
