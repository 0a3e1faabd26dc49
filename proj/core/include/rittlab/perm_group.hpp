#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rittlab/permutation.hpp"

namespace rittlab {

/// Default upper bound on the number of elements of an enumerated group.
inline constexpr std::size_t kDefaultGroupCap = 50'000;

/// Default upper bound on the size of a subgroup lattice.
inline constexpr std::size_t kDefaultLatticeCap = 10'000;

/// A finite permutation group, stored fully enumerated.
///
/// The element list is sorted lexicographically and always equals the closure
/// of the generators. Two groups compare equal iff their element sets agree
/// (generators are ignored). Values are immutable once built.
class PermutationGroup {
 public:
  /// Closes `generators` under composition. Throws CapExceeded when the
  /// group would have more than `cap` elements.
  static PermutationGroup close(std::size_t degree, std::vector<Permutation> generators,
                                std::size_t cap = kDefaultGroupCap);

  static PermutationGroup trivial(std::size_t degree);

  /// Wraps an element set that is already known to be a group. The list is
  /// sorted and a small generating set is derived from it.
  static PermutationGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }

  bool contains(const Permutation& p) const;
  /// Subgroup test (checks the generators of `sub`).
  bool contains(const PermutationGroup& sub) const;

  /// Position of `p` in elements(), if present.
  std::optional<std::size_t> index_of(const Permutation& p) const;

  /// Orbit of a point, sorted ascending.
  std::vector<Point> orbit(Point pt) const;
  std::vector<std::vector<Point>> orbits() const;

  bool is_trivial() const noexcept { return elements_.size() == 1; }

  friend bool operator==(const PermutationGroup& a, const PermutationGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// A generating set found greedily along the sorted element list; no
/// generator lies in the subgroup generated by the earlier ones.
std::vector<Permutation> irredundant_generators(const PermutationGroup& g);

PermutationGroup point_stabilizer(const PermutationGroup& g, Point pt);

bool is_transitive(const PermutationGroup& g);
bool is_abelian(const PermutationGroup& g);

/// Every subgroup normal. Decided on cyclic subgroups.
bool is_dedekind(const PermutationGroup& g);

/// IJ = JI for all subgroups. Decided on pairs of cyclic subgroups, which
/// suffices because a subgroup permuting with each generator's cyclic group
/// permutes with the group they generate.
bool is_quasi_hamiltonian(const PermutationGroup& g);

/// Distinct cyclic subgroups ⟨g⟩, sorted by (order, elements).
std::vector<PermutationGroup> cyclic_subgroups(const PermutationGroup& g);

PermutationGroup cyclic_subgroup(const PermutationGroup& ambient, const Permutation& g);

struct ProductSet {
  std::vector<Permutation> elements;  // sorted
  bool is_subgroup = false;
};

/// The set IJ = {ij}. It is a subgroup exactly when IJ = JI.
ProductSet set_product(const PermutationGroup& i, const PermutationGroup& j);

PermutationGroup intersection(const PermutationGroup& i, const PermutationGroup& j);

/// ⟨I, J⟩.
PermutationGroup join(const PermutationGroup& i, const PermutationGroup& j);

PermutationGroup normalizer_in(const PermutationGroup& g, const PermutationGroup& u);
bool is_normal_in(const PermutationGroup& g, const PermutationGroup& u);

/// ∩_{g∈G} g⁻¹Ug, the largest normal subgroup of G inside U.
PermutationGroup core_in(const PermutationGroup& g, const PermutationGroup& u);

/// Index [G:U]. Requires U ≤ G.
std::size_t index_of(const PermutationGroup& g, const PermutationGroup& u);

struct CosetAction {
  /// Least element of each left coset gU, in increasing order. Coset i is point i.
  std::vector<Permutation> representatives;
  /// Image of G in Sym([G:U]) under left multiplication.
  PermutationGroup image;
  PermutationGroup kernel;
};

CosetAction coset_action(const PermutationGroup& g, const PermutationGroup& u);

/// All U with H ≤ U ≤ G, sorted by (order, elements); H first, G last.
/// Found by repeatedly adjoining single elements to known subgroups until no
/// new subgroup appears.
std::vector<PermutationGroup> intermediate_subgroups(const PermutationGroup& g,
                                                     const PermutationGroup& h,
                                                     std::size_t cap = kDefaultLatticeCap);

/// Witness for a permutation isomorphism: `point_map` conjugates G1 onto G2
/// (point_map · g · point_map⁻¹ ∈ G2 for g ∈ G1), and `generator_images[i]`
/// is the image of `source_generators[i]`.
struct PermIsomorphism {
  Permutation point_map;
  std::vector<Permutation> source_generators;
  std::vector<Permutation> generator_images;
};

std::optional<PermIsomorphism> find_perm_isomorphism(const PermutationGroup& g1,
                                                     const PermutationGroup& g2);

inline bool perm_isomorphic(const PermutationGroup& g1, const PermutationGroup& g2) {
  return find_perm_isomorphism(g1, g2).has_value();
}

/// An abstract group isomorphism G1 → G2 given as the image of every element
/// of G1 (indexed like G1.elements()).
std::optional<std::vector<Permutation>> find_abstract_isomorphism(const PermutationGroup& g1,
                                                                  const PermutationGroup& g2);

inline bool abstractly_isomorphic(const PermutationGroup& g1, const PermutationGroup& g2) {
  return find_abstract_isomorphism(g1, g2).has_value();
}

}  // namespace rittlab
