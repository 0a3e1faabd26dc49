#include <algorithm>
#include <functional>
#include <map>

#include "rittlab/perm_group.hpp"

namespace rittlab {
namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

using ElementMap = std::vector<std::size_t>;  // index in G1 -> index in G2

// Extends the partial map along right multiplication by the chosen
// generators. Returns false on a clash or a non-injective image.
bool propagate(const PermutationGroup& g1, const PermutationGroup& g2,
               const std::vector<Permutation>& sources, const std::vector<Permutation>& images,
               ElementMap& map) {
  std::fill(map.begin(), map.end(), kUnset);
  std::vector<bool> used(g2.order(), false);
  const std::size_t id1 = *g1.index_of(Permutation::identity(g1.degree()));
  const std::size_t id2 = *g2.index_of(Permutation::identity(g2.degree()));
  map[id1] = id2;
  used[id2] = true;
  std::vector<std::size_t> queue{id1};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto& x = g1.elements()[queue[head]];
    const auto& fx = g2.elements()[map[queue[head]]];
    for (std::size_t i = 0; i < sources.size(); ++i) {
      const std::size_t xs = *g1.index_of(x * sources[i]);
      const std::size_t target = *g2.index_of(fx * images[i]);
      if (map[xs] == kUnset) {
        if (used[target]) return false;
        used[target] = true;
        map[xs] = target;
        queue.push_back(xs);
      } else if (map[xs] != target) {
        return false;
      }
    }
  }
  return true;
}

template <class Key>
std::map<Key, std::size_t> histogram(const PermutationGroup& g,
                                     const std::function<Key(const Permutation&)>& key) {
  std::map<Key, std::size_t> h;
  for (const auto& e : g.elements()) ++h[key(e)];
  return h;
}

// Depth-first search over generator images. `compatible(s, t)` filters the
// candidate images of a source generator; `accept` sees every complete
// isomorphism and stops the search by returning true.
bool search_isomorphisms(const PermutationGroup& g1, const PermutationGroup& g2,
                         const std::function<bool(const Permutation&, const Permutation&)>& compatible,
                         const std::function<bool(const std::vector<Permutation>&,
                                                  const std::vector<Permutation>&,
                                                  const ElementMap&)>& accept) {
  const auto sources = irredundant_generators(g1);
  std::vector<std::vector<Permutation>> candidates(sources.size());
  for (std::size_t i = 0; i < sources.size(); ++i) {
    for (const auto& t : g2.elements()) {
      if (compatible(sources[i], t)) candidates[i].push_back(t);
    }
    if (candidates[i].empty()) return false;
  }

  ElementMap map(g1.order(), kUnset);
  std::vector<Permutation> images;
  std::function<bool(std::size_t)> descend = [&](std::size_t depth) -> bool {
    std::vector<Permutation> prefix(sources.begin(), sources.begin() + static_cast<long>(depth));
    if (depth == sources.size()) {
      if (!propagate(g1, g2, sources, images, map)) return false;
      return accept(sources, images, map);
    }
    for (const auto& t : candidates[depth]) {
      images.push_back(t);
      prefix.push_back(sources[depth]);
      if (propagate(g1, g2, prefix, images, map) && descend(depth + 1)) return true;
      prefix.pop_back();
      images.pop_back();
    }
    return false;
  };

  if (sources.empty()) {
    propagate(g1, g2, sources, images, map);
    return accept(sources, images, map);
  }
  return descend(0);
}

// Given an abstract isomorphism ψ, looks for a point bijection β with
// β g β⁻¹ = ψ(g). Orbits of G1 are matched to orbits of G2 whose point
// stabilizers correspond under ψ.
std::optional<Permutation> realize_on_points(const PermutationGroup& g1, const PermutationGroup& g2,
                                             const ElementMap& psi) {
  const std::size_t n = g1.degree();
  const auto orbits1 = g1.orbits();
  const auto orbits2 = g2.orbits();

  // For each orbit of G1: its representative, and for every point z of the
  // orbit an element index carrying the representative to z.
  struct OrbitData {
    Point rep;
    std::vector<std::pair<Point, std::size_t>> transversal;
    std::vector<std::size_t> stabilizer;  // indices in G1
  };
  std::vector<OrbitData> data;
  for (const auto& o : orbits1) {
    OrbitData d{o.front(), {}, {}};
    std::vector<bool> reached(n, false);
    for (std::size_t i = 0; i < g1.order(); ++i) {
      Point z = g1.elements()[i](d.rep);
      if (!reached[z]) {
        reached[z] = true;
        d.transversal.emplace_back(z, i);
      }
      if (z == d.rep) d.stabilizer.push_back(i);
    }
    data.push_back(std::move(d));
  }

  std::vector<Point> beta(n, 0);
  std::vector<bool> orbit_used(orbits2.size(), false);
  std::function<bool(std::size_t)> assign = [&](std::size_t j) -> bool {
    if (j == data.size()) return true;
    const auto& d = data[j];
    for (std::size_t k = 0; k < orbits2.size(); ++k) {
      if (orbit_used[k] || orbits2[k].size() != d.transversal.size()) continue;
      for (Point y : orbits2[k]) {
        bool stabilizes = std::all_of(d.stabilizer.begin(), d.stabilizer.end(), [&](std::size_t s) {
          return g2.elements()[psi[s]](y) == y;
        });
        if (!stabilizes) continue;
        for (const auto& [z, i] : d.transversal) beta[z] = g2.elements()[psi[i]](y);
        orbit_used[k] = true;
        if (assign(j + 1)) return true;
        orbit_used[k] = false;
      }
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;

  Permutation b(beta);
  const Permutation b_inv = b.inverse();
  for (std::size_t i = 0; i < g1.order(); ++i) {
    if (b * g1.elements()[i] * b_inv != g2.elements()[psi[i]]) return std::nullopt;
  }
  return b;
}

}  // namespace

std::optional<std::vector<Permutation>> find_abstract_isomorphism(const PermutationGroup& g1,
                                                                  const PermutationGroup& g2) {
  if (g1.order() != g2.order()) return std::nullopt;
  std::function<std::size_t(const Permutation&)> order = [](const Permutation& p) {
    return p.order();
  };
  if (histogram(g1, order) != histogram(g2, order)) return std::nullopt;

  std::optional<std::vector<Permutation>> result;
  search_isomorphisms(
      g1, g2, [](const Permutation& s, const Permutation& t) { return s.order() == t.order(); },
      [&](const auto&, const auto&, const ElementMap& map) {
        std::vector<Permutation> images;
        images.reserve(map.size());
        for (std::size_t idx : map) images.push_back(g2.elements()[idx]);
        result = std::move(images);
        return true;
      });
  return result;
}

std::optional<PermIsomorphism> find_perm_isomorphism(const PermutationGroup& g1,
                                                     const PermutationGroup& g2) {
  if (g1.degree() != g2.degree() || g1.order() != g2.order()) return std::nullopt;
  std::function<std::vector<std::size_t>(const Permutation&)> type = [](const Permutation& p) {
    return p.cycle_type();
  };
  if (histogram(g1, type) != histogram(g2, type)) return std::nullopt;

  auto orbit_sizes = [](const PermutationGroup& g) {
    std::vector<std::size_t> sizes;
    for (const auto& o : g.orbits()) sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  if (orbit_sizes(g1) != orbit_sizes(g2)) return std::nullopt;

  std::optional<PermIsomorphism> result;
  search_isomorphisms(
      g1, g2,
      [](const Permutation& s, const Permutation& t) { return s.cycle_type() == t.cycle_type(); },
      [&](const std::vector<Permutation>& sources, const std::vector<Permutation>& images,
          const ElementMap& map) {
        auto beta = realize_on_points(g1, g2, map);
        if (!beta) return false;
        result = PermIsomorphism{*beta, sources, images};
        return true;
      });
  return result;
}

}  // namespace rittlab
