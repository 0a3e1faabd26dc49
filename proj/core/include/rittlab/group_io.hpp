#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rittlab/perm_group.hpp"

namespace rittlab {

/// Parses cycle notation such as "(0 1 2)(3 4)" or "()".
Permutation parse_permutation(std::string_view text, std::size_t degree);

/// Parses a comma-separated list of permutations in cycle notation.
std::vector<Permutation> parse_permutation_list(std::string_view text, std::size_t degree);

std::string format_permutation_list(const std::vector<Permutation>& perms);

/// Group file:
///
///     degree: 6
///     generators: (0 1 2 3 4 5), (1 5)(2 4)
///
/// Blank lines and lines starting with '#' are ignored.
PermutationGroup parse_group(std::string_view text);
std::string format_group(const PermutationGroup& g);

/// A context file is a group file plus the point stabilizer H and an
/// optional transitive subgroup A:
///
///     H: stabilizer 0          (or  H: generators (1 5)(2 4))
///     A: generators (0 1 2 3 4 5)
///     name: d6                 (optional)
struct ContextSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::optional<Point> h_stabilizer_point;
  std::vector<Permutation> h_generators;
  std::optional<std::vector<Permutation>> a_generators;
};

ContextSpec parse_context(std::string_view text);
std::string format_context(const ContextSpec& spec);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace rittlab
