#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "run_report.hpp"

namespace rittlab::cli {

struct GroupVerifyOptions {
  std::string path;
  std::vector<std::string> theorems{"ritt1", "mon", "aut", "div"};
  bool weak_hypothesis = false;
};
void group_verify(const GroupVerifyOptions& o, RunReport& report);

struct GroupChainsOptions {
  std::string path;
  std::optional<std::pair<std::size_t, std::size_t>> walk;
  bool weak_hypothesis = false;
};
void group_chains(const GroupChainsOptions& o, RunReport& report);

void poly_decompose(const std::string& path, RunReport& report);
void poly_invariants(const std::string& path, RunReport& report);
void additive_factor(const std::string& path, RunReport& report);

struct LaurentOptions {
  std::string field;
  std::string poly;
  std::optional<std::size_t> precision;
  std::optional<std::string> theta;
};
void laurent_branch(const LaurentOptions& o, RunReport& report);

struct CounterexampleOptions {
  std::uint32_t prime = 7;
  std::optional<std::string> outer_num, outer_den, inner_num, inner_den;
};
void counterexample(const CounterexampleOptions& o, RunReport& report);

void fixtures_run_all(RunReport& report);

}  // namespace rittlab::cli
