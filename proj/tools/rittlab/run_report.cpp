#include "run_report.hpp"

#include <algorithm>

#include "rittlab/error.hpp"

namespace rittlab::cli {

using nlohmann::json;

bool RunReport::failed() const {
  return std::any_of(items_.begin(), items_.end(), [](const RunItem& i) { return i.status == Status::fail; });
}

void RunReport::write(std::ostream& out, bool json_only) const {
  if (!json_only) {
    out << "$ " << command_ << "\n";
    for (const auto& l : lines_) out << l << "\n";
    if (!items_.empty()) {
      if (!lines_.empty()) out << "\n";
      std::vector<std::vector<std::string>> rows{{"context", "theorem", "status", "summary"}};
      for (const auto& i : items_) rows.push_back({i.context, i.theorem, to_string(i.status), i.summary});
      for (const auto& l : format_table(rows)) out << l << "\n";
      for (const auto& i : items_) {
        if (i.status == Status::fail) out << "witness " << i.context << "/" << i.theorem << ": " << i.details.dump() << "\n";
      }
    }
    out << "\n";
  }
  for (const auto& i : items_) {
    json j{{"context", i.context}, {"theorem", i.theorem}, {"status", to_string(i.status)}, {"details", i.details}};
    out << j.dump() << "\n";
  }
}

RunItem run_check(const std::string& context, const std::string& theorem,
                  const std::function<TheoremReport()>& fn) {
  RunItem item{context, theorem, Status::pass, "", json::object()};
  try {
    TheoremReport r = fn();
    item.status = r.status;
    item.summary = r.summary;
    item.details = std::move(r.details);
  } catch (const NotIndecomposable& e) {
    item.status = Status::hypothesis_not_met;
    item.summary = e.what();
    item.details = json{{"reason", e.what()}};
  } catch (const HypothesisFailed& e) {
    item.status = Status::hypothesis_not_met;
    item.summary = e.what();
    item.details = json{{"reason", e.what()}};
  } catch (const TheoremViolated& e) {
    item.status = Status::fail;
    item.summary = e.what();
    item.details = json{{"reason", e.what()}, {"witness", e.witness()}};
  }
  if (!item.details.is_object()) item.details = json{{"value", item.details}};
  item.details["summary"] = item.summary;
  return item;
}

std::vector<std::string> format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::vector<std::string> out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace rittlab::cli
