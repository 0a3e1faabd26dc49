#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rittlab/perm_group.hpp"

namespace rittlab {

/// A finite group given by its Cayley table on {0..n-1}; element 0 is the identity.
struct CayleyTable {
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> product;  // product[a][b] = a·b
  std::vector<std::size_t> generators;
};

CayleyTable cyclic_table(std::size_t n);

/// ⟨a, b | a^m = 1, b^n = a^s, b a b⁻¹ = a^r⟩ with elements a^i b^j stored at
/// index i + m·j. Throws InvalidArgument if the parameters are inconsistent.
CayleyTable metacyclic_table(std::size_t m, std::size_t n, std::size_t r, std::size_t s);

CayleyTable direct_product_table(const CayleyTable& a, const CayleyTable& b);

/// N ⋊ C_k where the generator of C_k acts on N by `automorphism` (a
/// permutation of N's element indices whose k-th power is the identity).
CayleyTable semidirect_cyclic_table(const CayleyTable& n, std::size_t k,
                                    const std::vector<std::size_t>& automorphism);

/// Left regular representation: element g acts by x ↦ g·x on the indices.
PermutationGroup regular_representation(const CayleyTable& t);

/// Image of table element `g` in the left regular representation.
Permutation regular_permutation(const CayleyTable& t, std::size_t g);

struct SmallGroupEntry {
  std::string label;
  PermutationGroup group;  // regular representation
};

/// Every group of order at most 16 up to isomorphism, sorted by order.
const std::vector<SmallGroupEntry>& small_group_table();

/// Label of the table entry isomorphic to `g`, for |g| ≤ 16.
std::optional<std::string> identify_small_group(const PermutationGroup& g);

/// Label when |g| ≤ 16, otherwise "order N abelian" / "order N nonabelian".
std::string group_type_label(const PermutationGroup& g);

}  // namespace rittlab
