#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rittlab/report.hpp"

namespace rittlab::cli {

struct RunItem {
  std::string context;
  std::string theorem;
  Status status = Status::pass;
  std::string summary;
  nlohmann::json details = nlohmann::json::object();
};

/// Output of one command: free-form human lines, then an aligned table of
/// items, then one JSON object per item. The JSON block alone is printed
/// when json_only is set.
class RunReport {
 public:
  explicit RunReport(std::string command) : command_(std::move(command)) {}

  void line(std::string text) { lines_.push_back(std::move(text)); }
  void add(RunItem item) { items_.push_back(std::move(item)); }
  const std::vector<RunItem>& items() const noexcept { return items_; }

  bool failed() const;
  /// 0 when no item failed, 1 otherwise.
  int exit_code() const { return failed() ? 1 : 0; }

  void write(std::ostream& out, bool json_only) const;

 private:
  std::string command_;
  std::vector<std::string> lines_;
  std::vector<RunItem> items_;
};

/// Runs a verifier. HypothesisFailed and NotIndecomposable become
/// hypothesis-not-met and TheoremViolated becomes fail with its witness as
/// details; other errors propagate.
RunItem run_check(const std::string& context, const std::string& theorem,
                  const std::function<TheoremReport()>& fn);

/// Left-aligned columns separated by two spaces; no trailing blanks.
std::vector<std::string> format_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace rittlab::cli
