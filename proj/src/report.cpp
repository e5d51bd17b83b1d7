#include "hopflink/report.hpp"

#include <algorithm>
#include <sstream>

#include "hopflink/errors.hpp"

namespace hopf {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

void AnalysisReport::add(Check c) {
  for (const auto& x : checks)
    if (x.name == c.name) throw Error("duplicate check name " + c.name);
  checks.push_back(std::move(c));
}

void AnalysisReport::add(const std::string& name, bool ok, const std::string& details) {
  add(make_check(name, ok, details));
}

void AnalysisReport::add_not_applicable(const std::string& name, const std::string& details) {
  add(Check{name, CheckStatus::not_applicable, details});
}

void AnalysisReport::add_all(const std::vector<Check>& cs) {
  for (const auto& c : cs) add(c);
}

bool AnalysisReport::any_failed() const { return count(CheckStatus::fail) > 0; }

std::size_t AnalysisReport::count(CheckStatus s) const {
  return std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; });
}

std::string AnalysisReport::to_json() const {
  nlohmann::ordered_json j;
  j["report_version"] = 1;
  j["algebra_id"] = algebra_id;
  j["command"] = command;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = status_name(c.status);
    e["details"] = c.details;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  j["summary"] = summary;
  nlohmann::ordered_json art = nlohmann::ordered_json::object();
  for (const auto& [k, v] : artifacts) art[k] = v;
  j["artifacts"] = std::move(art);
  return j.dump(2) + "\n";
}

std::string AnalysisReport::to_text() const {
  std::ostringstream os;
  os << "algebra: " << algebra_id << "\n";
  os << "command: " << command << "\n";
  for (auto it = summary.begin(); it != summary.end(); ++it)
    os << it.key() << ": " << it.value().dump() << "\n";
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks) {
    std::string tag = c.status == CheckStatus::pass   ? "PASS"
                      : c.status == CheckStatus::fail ? "FAIL"
                                                      : "N/A ";
    os << "  [" << tag << "] " << c.name << std::string(width - c.name.size(), ' ');
    if (!c.details.empty()) os << "  " << c.details;
    os << "\n";
  }
  for (const auto& [k, v] : artifacts) os << "artifact " << k << ": " << v << "\n";
  os << count(CheckStatus::pass) << " passed, " << count(CheckStatus::fail) << " failed, "
     << count(CheckStatus::not_applicable) << " not applicable\n";
  return os.str();
}

}  // namespace hopf
