#pragma once

// Analysis reports: named checks with pass / fail / not-applicable status,
// a free-form summary and artifact paths. Serialized deterministically.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace hopf {

enum class CheckStatus { pass, fail, not_applicable };
const char* status_name(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string details;
};

struct AnalysisReport {
  std::string algebra_id;
  std::string command;
  std::vector<Check> checks;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  std::map<std::string, std::string> artifacts;

  /// Throws Error on a duplicate check name.
  void add(Check c);
  void add(const std::string& name, bool ok, const std::string& details = "");
  void add_not_applicable(const std::string& name, const std::string& details);
  void add_all(const std::vector<Check>& cs);
  bool any_failed() const;
  std::size_t count(CheckStatus s) const;

  std::string to_json() const;
  std::string to_text() const;
};

inline Check make_check(const std::string& name, bool ok, const std::string& details = "") {
  return Check{name, ok ? CheckStatus::pass : CheckStatus::fail, details};
}

}  // namespace hopf
