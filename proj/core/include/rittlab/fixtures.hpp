#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rittlab/chains.hpp"

namespace rittlab {

/// A built-in context. `text` is in the context file format and matches the
/// copy shipped under data/contexts/<name>.ctx.
struct Fixture {
  std::string name;
  std::string text;
};

const std::vector<Fixture>& fixture_catalog();

/// Built-in polynomial files (poly file format), mirrored under data/polys/.
const std::vector<Fixture>& polynomial_catalog();
/// Built-in skew polynomial files, mirrored under data/skew/.
const std::vector<Fixture>& skew_catalog();

/// Throws InvalidArgument for an unknown name.
const Fixture& find_fixture(std::string_view name);

ChainContext load_fixture(std::string_view name);

}  // namespace rittlab
