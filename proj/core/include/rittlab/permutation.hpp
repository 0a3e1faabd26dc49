#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rittlab {

/// Points are 0-indexed.
using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}, stored as its image sequence.
///
/// Products compose right-to-left: (g * h)(x) == g(h(x)). Ordering is
/// lexicographic on the image sequence, which is what every deterministic
/// listing in the library sorts by.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidArgument unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Order of the element (lcm of the cycle lengths).
  std::size_t order() const;

  /// Nontrivial cycles, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// Multiset of all cycle lengths (fixed points included), sorted ascending.
  std::vector<std::size_t> cycle_type() const;

  std::size_t fixed_point_count() const noexcept;

  /// Cycle notation such as "(0 1 2)(3 4)"; the identity is "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend Permutation operator*(const Permutation& g, const Permutation& h);

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// Composition g∘h.
Permutation operator*(const Permutation& g, const Permutation& h);

/// by⁻¹ · g · by.
Permutation conjugate(const Permutation& g, const Permutation& by);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace rittlab
