#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace rittlab {

enum class Status { pass, fail, hypothesis_not_met };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::hypothesis_not_met:
      return "hypothesis-not-met";
  }
  return "fail";
}

/// Outcome of one verifier run. Verifiers return a passing report and signal
/// everything else with HypothesisFailed or TheoremViolated; front ends turn
/// those into the other statuses.
struct TheoremReport {
  std::string theorem;
  Status status = Status::pass;
  std::string summary;
  nlohmann::json details = nlohmann::json::object();
};

}  // namespace rittlab
