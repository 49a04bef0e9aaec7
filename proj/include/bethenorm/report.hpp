#ifndef BETHENORM_REPORT_HPP
#define BETHENORM_REPORT_HPP

#include <bethenorm/rational.hpp>

#include <json.hpp>

#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace bethenorm {

enum class Status { pass, fail, error };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "error";
}

/// One verified relation. lhs/rhs are rendered values: exact rationals as
/// "p/q", floats with 17 significant digits.
struct Check {
  std::string name;
  Status status = Status::fail;
  std::string lhs;
  std::string rhs;
  std::string tolerance;
  std::string note;
};

inline Check exact_check(std::string name, const Rational& lhs, const Rational& rhs, std::string note = "") {
  return {std::move(name), lhs == rhs ? Status::pass : Status::fail, to_string(lhs), to_string(rhs), "exact",
          std::move(note)};
}

inline Check bool_check(std::string name, bool ok, std::string note = "") {
  return {std::move(name), ok ? Status::pass : Status::fail, ok ? "true" : "false", "true", "exact", std::move(note)};
}

/// Passes when value <= bound.
inline Check bound_check(std::string name, double value, double bound, std::string note = "") {
  return {std::move(name), value <= bound ? Status::pass : Status::fail, format_double(value), format_double(bound),
          format_double(bound), std::move(note)};
}

inline Check error_check(std::string name, const std::string& what) {
  return {std::move(name), Status::error, "", "", "", what};
}

struct Report {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  std::vector<Check> checks;
  double elapsed_ms = 0.0;

  bool all_pass() const {
    for (const auto& c : checks)
      if (c.status != Status::pass) return false;
    return true;
  }
  bool any_error() const {
    for (const auto& c : checks)
      if (c.status == Status::error) return true;
    return false;
  }

  void add(Check c) { checks.push_back(std::move(c)); }
  void add(const std::vector<Check>& cs) { checks.insert(checks.end(), cs.begin(), cs.end()); }

  /// Field order is fixed: command, inputs, checks, elapsed_ms.
  nlohmann::ordered_json to_json(bool with_elapsed = true) const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      nlohmann::ordered_json cj;
      cj["name"] = c.name;
      cj["status"] = to_string(c.status);
      cj["lhs"] = c.lhs;
      cj["rhs"] = c.rhs;
      cj["tolerance"] = c.tolerance;
      cj["note"] = c.note;
      j["checks"].push_back(std::move(cj));
    }
    if (with_elapsed) j["elapsed_ms"] = elapsed_ms;
    return j;
  }

  void print_table(std::ostream& os) const {
    os << "command: " << command << "\n";
    for (const auto& c : checks) {
      os << "  [" << (c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "ERROR") << "] "
         << c.name;
      if (!c.lhs.empty() || !c.rhs.empty()) os << ": " << c.lhs << " vs " << c.rhs;
      if (!c.tolerance.empty()) os << " (tol " << c.tolerance << ")";
      if (!c.note.empty()) os << " -- " << c.note;
      os << "\n";
    }
    os << (all_pass() ? "PASS" : any_error() ? "ERROR" : "FAIL") << "\n";
  }
};

}  // namespace bethenorm

#endif  // BETHENORM_REPORT_HPP
