#include "rittlab/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "rittlab/error.hpp"

namespace rittlab {
namespace {

using ElementSet = std::unordered_set<Permutation, PermutationHash>;

std::vector<Permutation> closure_elements(std::size_t degree,
                                          const std::vector<Permutation>& gens,
                                          std::size_t cap) {
  ElementSet seen;
  std::vector<Permutation> order;
  auto id = Permutation::identity(degree);
  seen.insert(id);
  order.push_back(id);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& s : gens) {
      Permutation next = order[head] * s;
      if (seen.insert(next).second) {
        if (order.size() >= cap) {
          throw CapExceeded("group order exceeds cap of " + std::to_string(cap) + " elements");
        }
        order.push_back(std::move(next));
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

void check_degrees(std::size_t degree, const std::vector<Permutation>& gens) {
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw InvalidArgument("generator " + g.to_cycle_string() + " has degree " +
                            std::to_string(g.degree()) + ", expected " + std::to_string(degree));
    }
  }
}

void check_common_degree(const PermutationGroup& a, const PermutationGroup& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("groups act on different degrees");
}

}  // namespace

PermutationGroup PermutationGroup::close(std::size_t degree, std::vector<Permutation> generators,
                                         std::size_t cap) {
  check_degrees(degree, generators);
  std::erase_if(generators, [](const Permutation& p) { return p.is_identity(); });
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  PermutationGroup g;
  g.degree_ = degree;
  g.elements_ = closure_elements(degree, generators, cap);
  g.generators_ = std::move(generators);
  return g;
}

PermutationGroup PermutationGroup::trivial(std::size_t degree) {
  PermutationGroup g;
  g.degree_ = degree;
  g.elements_.push_back(Permutation::identity(degree));
  return g;
}

PermutationGroup PermutationGroup::from_elements(std::size_t degree,
                                                 std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  PermutationGroup g;
  g.degree_ = degree;
  g.elements_ = std::move(elements);
  g.generators_ = irredundant_generators(g);
  return g;
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermutationGroup::contains(const PermutationGroup& sub) const {
  if (sub.degree_ != degree_ || order() % sub.order() != 0) return false;
  return std::all_of(sub.generators_.begin(), sub.generators_.end(),
                     [&](const Permutation& p) { return contains(p); });
}

std::optional<std::size_t> PermutationGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<Point> PermutationGroup::orbit(Point pt) const {
  std::vector<bool> seen(degree_, false);
  std::vector<Point> out{pt};
  seen[pt] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& s : generators_) {
      Point y = s(out[head]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> PermutationGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree_, false);
  for (Point p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto o = orbit(p);
    for (Point x : o) seen[x] = true;
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<Permutation> irredundant_generators(const PermutationGroup& g) {
  std::vector<Permutation> gens;
  std::vector<Permutation> current{Permutation::identity(g.degree())};
  for (const auto& e : g.elements()) {
    if (std::binary_search(current.begin(), current.end(), e)) continue;
    gens.push_back(e);
    current = closure_elements(g.degree(), gens, g.order());
    if (current.size() == g.order()) break;
  }
  return gens;
}

PermutationGroup point_stabilizer(const PermutationGroup& g, Point pt) {
  if (pt >= g.degree()) throw InvalidArgument("point out of range");
  std::vector<Permutation> fixed;
  for (const auto& e : g.elements()) {
    if (e(pt) == pt) fixed.push_back(e);
  }
  return PermutationGroup::from_elements(g.degree(), std::move(fixed));
}

bool is_transitive(const PermutationGroup& g) {
  return g.degree() > 0 && g.orbit(0).size() == g.degree();
}

bool is_abelian(const PermutationGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

PermutationGroup cyclic_subgroup(const PermutationGroup& ambient, const Permutation& g) {
  std::vector<Permutation> powers{Permutation::identity(ambient.degree())};
  for (Permutation x = g; !x.is_identity(); x = x * g) powers.push_back(x);
  std::sort(powers.begin(), powers.end());
  PermutationGroup out = PermutationGroup::from_elements(ambient.degree(), std::move(powers));
  return out;
}

std::vector<PermutationGroup> cyclic_subgroups(const PermutationGroup& g) {
  std::map<std::vector<Permutation>, PermutationGroup> unique;
  std::unordered_set<Permutation, PermutationHash> covered;
  for (const auto& e : g.elements()) {
    if (covered.count(e)) continue;
    auto c = cyclic_subgroup(g, e);
    // Every generator of ⟨e⟩ yields the same subgroup.
    for (const auto& x : c.elements()) {
      if (x.order() == e.order()) covered.insert(x);
    }
    unique.emplace(c.elements(), std::move(c));
  }
  std::vector<PermutationGroup> out;
  for (auto& [_, c] : unique) out.push_back(std::move(c));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.order() < b.order();
  });
  return out;
}

bool is_dedekind(const PermutationGroup& g) {
  for (const auto& c : cyclic_subgroups(g)) {
    if (!is_normal_in(g, c)) return false;
  }
  return true;
}

bool is_quasi_hamiltonian(const PermutationGroup& g) {
  auto cyclics = cyclic_subgroups(g);
  for (std::size_t i = 0; i < cyclics.size(); ++i) {
    for (std::size_t j = i + 1; j < cyclics.size(); ++j) {
      if (!set_product(cyclics[i], cyclics[j]).is_subgroup) return false;
    }
  }
  return true;
}

namespace {

std::vector<Permutation> product_elements(const PermutationGroup& i, const PermutationGroup& j) {
  std::vector<Permutation> out;
  out.reserve(i.order() * j.order());
  for (const auto& a : i.elements()) {
    for (const auto& b : j.elements()) out.push_back(a * b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ProductSet set_product(const PermutationGroup& i, const PermutationGroup& j) {
  check_common_degree(i, j);
  ProductSet result;
  result.elements = product_elements(i, j);
  result.is_subgroup = result.elements == product_elements(j, i);
  return result;
}

PermutationGroup intersection(const PermutationGroup& i, const PermutationGroup& j) {
  check_common_degree(i, j);
  std::vector<Permutation> common;
  std::set_intersection(i.elements().begin(), i.elements().end(), j.elements().begin(),
                        j.elements().end(), std::back_inserter(common));
  return PermutationGroup::from_elements(i.degree(), std::move(common));
}

PermutationGroup join(const PermutationGroup& i, const PermutationGroup& j) {
  check_common_degree(i, j);
  auto gens = i.generators();
  gens.insert(gens.end(), j.generators().begin(), j.generators().end());
  return PermutationGroup::close(i.degree(), std::move(gens));
}

PermutationGroup normalizer_in(const PermutationGroup& g, const PermutationGroup& u) {
  check_common_degree(g, u);
  std::vector<Permutation> normalizing;
  for (const auto& x : g.elements()) {
    const auto inv = x.inverse();
    bool ok = std::all_of(u.generators().begin(), u.generators().end(),
                          [&](const Permutation& s) { return u.contains(inv * s * x); });
    if (ok) normalizing.push_back(x);
  }
  return PermutationGroup::from_elements(g.degree(), std::move(normalizing));
}

bool is_normal_in(const PermutationGroup& g, const PermutationGroup& u) {
  check_common_degree(g, u);
  for (const auto& x : g.generators()) {
    const auto inv = x.inverse();
    for (const auto& s : u.generators()) {
      if (!u.contains(inv * s * x)) return false;
    }
  }
  return true;
}

PermutationGroup core_in(const PermutationGroup& g, const PermutationGroup& u) {
  check_common_degree(g, u);
  // r ∈ x⁻¹Ux  ⟺  x r x⁻¹ ∈ U.
  std::vector<Permutation> remaining = u.elements();
  for (const auto& x : g.elements()) {
    const auto inv = x.inverse();
    std::erase_if(remaining, [&](const Permutation& r) { return !u.contains(x * r * inv); });
    if (remaining.size() == 1) break;
  }
  return PermutationGroup::from_elements(g.degree(), std::move(remaining));
}

std::size_t index_of(const PermutationGroup& g, const PermutationGroup& u) {
  if (u.order() == 0 || g.order() % u.order() != 0) {
    throw InvalidArgument("index of a non-subgroup");
  }
  return g.order() / u.order();
}

CosetAction coset_action(const PermutationGroup& g, const PermutationGroup& u) {
  if (!g.contains(u)) throw InvalidArgument("coset_action requires U ≤ G");
  const std::size_t n = g.order() / u.order();

  // Elements are visited in increasing order, so the first element of each
  // coset met is its least representative.
  std::vector<std::size_t> coset_of(g.order(), n);
  CosetAction out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (coset_of[i] != n) continue;
    const auto& rep = g.elements()[i];
    const std::size_t id = out.representatives.size();
    out.representatives.push_back(rep);
    for (const auto& x : u.elements()) coset_of[*g.index_of(rep * x)] = id;
  }

  auto act = [&](const Permutation& x) {
    std::vector<Point> images(n);
    for (std::size_t c = 0; c < n; ++c) {
      images[c] = static_cast<Point>(coset_of[*g.index_of(x * out.representatives[c])]);
    }
    return Permutation(std::move(images));
  };

  std::vector<Permutation> image_gens;
  for (const auto& s : g.generators()) image_gens.push_back(act(s));
  out.image = PermutationGroup::close(n, std::move(image_gens));

  std::vector<Permutation> kernel;
  for (const auto& x : g.elements()) {
    bool fixes_all = true;
    for (std::size_t c = 0; c < n && fixes_all; ++c) {
      fixes_all = coset_of[*g.index_of(x * out.representatives[c])] == c;
    }
    if (fixes_all) kernel.push_back(x);
  }
  out.kernel = PermutationGroup::from_elements(g.degree(), std::move(kernel));
  return out;
}

std::vector<PermutationGroup> intermediate_subgroups(const PermutationGroup& g,
                                                     const PermutationGroup& h,
                                                     std::size_t cap) {
  if (!g.contains(h)) throw InvalidArgument("intermediate_subgroups requires H ≤ G");

  std::map<std::vector<Permutation>, std::size_t> known;
  std::vector<PermutationGroup> found{h};
  known.emplace(h.elements(), 0);

  for (std::size_t head = 0; head < found.size(); ++head) {
    const PermutationGroup u = found[head];
    // ⟨U, x⟩ only depends on the coset xU, so one representative per coset.
    std::unordered_set<Permutation, PermutationHash> covered(u.elements().begin(),
                                                             u.elements().end());
    for (const auto& x : g.elements()) {
      if (covered.count(x)) continue;
      for (const auto& y : u.elements()) covered.insert(x * y);
      auto gens = u.generators();
      gens.push_back(x);
      auto v = PermutationGroup::close(g.degree(), std::move(gens));
      if (known.count(v.elements())) continue;
      if (found.size() >= cap) {
        throw CapExceeded("subgroup lattice exceeds cap of " + std::to_string(cap));
      }
      known.emplace(v.elements(), found.size());
      found.push_back(std::move(v));
    }
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return found;
}

}  // namespace rittlab
