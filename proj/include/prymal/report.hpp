#pragma once

// Check records, grouped per acceptance criterion, with deterministic JSON
// and markdown renderings.

#include "prymal/rational.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

namespace prymal {

/// Where an expected value comes from:
///   reference - a published value, checked against the computation
///   oracle    - an independent second computation
///   identity  - a trivial or structural identity
enum class Provenance { Reference, Oracle, Identity };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Reference:
      return "reference";
    case Provenance::Oracle:
      return "oracle";
    case Provenance::Identity:
      return "identity";
  }
  return "unknown";
}

/// A number as emitted in JSON mode: value plus provenance.
inline nlohmann::json tagged(const std::string& value, Provenance p) {
  return nlohmann::json{{"value", value}, {"provenance", to_string(p)}};
}
inline nlohmann::json tagged(const Rational& value, Provenance p) { return tagged(to_string(value), p); }
inline nlohmann::json tagged(const Integer& value, Provenance p) { return tagged(to_string(value), p); }

struct Check {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string computed;
  Provenance provenance = Provenance::Identity;
};

struct CriterionResult {
  int id = 0;
  std::string suite;
  std::string title;
  double limit_seconds = 0;
  double seconds = 0;
  std::vector<Check> checks;
  std::string error;  // set when the criterion threw

  bool within_limit() const { return seconds < limit_seconds; }
  bool passed() const {
    if (!error.empty() || !within_limit()) return false;
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }

  void expect(const std::string& name, const std::string& expected, const std::string& computed, Provenance p) {
    checks.push_back({name, expected == computed, expected, computed, p});
  }
  void expect_true(const std::string& name, bool value, Provenance p) {
    checks.push_back({name, value, "true", value ? "true" : "false", p});
  }
  template <class T>
  void expect_equal(const std::string& name, const T& expected, const T& computed, Provenance p) {
    using prymal::to_string;
    using std::to_string;
    checks.push_back({name, expected == computed, to_string(expected), to_string(computed), p});
  }

  std::vector<const Check*> failures() const {
    std::vector<const Check*> out;
    for (const auto& c : checks)
      if (!c.passed) out.push_back(&c);
    return out;
  }
};

struct Report {
  std::vector<CriterionResult> criteria;

  bool passed() const {
    for (const auto& c : criteria)
      if (!c.passed()) return false;
    return !criteria.empty();
  }

  /// nlohmann::json objects keep keys sorted, so the dump is canonical.
  nlohmann::json to_json(bool with_timings = false) const {
    nlohmann::json out;
    out["passed"] = passed();
    out["criteria"] = nlohmann::json::array();
    for (const auto& c : criteria) {
      nlohmann::json jc;
      jc["id"] = c.id;
      jc["suite"] = c.suite;
      jc["title"] = c.title;
      jc["passed"] = c.passed();
      jc["limit_seconds"] = c.limit_seconds;
      if (with_timings) jc["seconds"] = c.seconds;
      if (!c.error.empty()) jc["error"] = c.error;
      jc["checks"] = nlohmann::json::array();
      for (const auto& k : c.checks)
        jc["checks"].push_back({{"name", k.name},
                                {"status", k.passed ? "pass" : "fail"},
                                {"expected", tagged(k.expected, k.provenance)},
                                {"computed", k.computed}});
      out["criteria"].push_back(std::move(jc));
    }
    return out;
  }

  std::string to_markdown(bool with_timings = false) const {
    std::ostringstream os;
    os << "# Verification report\n\n";
    for (const auto& c : criteria) {
      os << "## " << c.id << ". " << c.title << " [" << (c.passed() ? "PASS" : "FAIL") << "]\n\n";
      if (with_timings) os << "time " << c.seconds << " s (limit " << c.limit_seconds << " s)\n\n";
      if (!c.error.empty()) os << "error: " << c.error << "\n\n";
      os << "| check | status | expected | computed | provenance |\n|---|---|---|---|---|\n";
      for (const auto& k : c.checks)
        os << "| " << k.name << " | " << (k.passed ? "pass" : "fail") << " | " << k.expected << " | " << k.computed
           << " | " << to_string(k.provenance) << " |\n";
      os << "\n";
    }
    os << (passed() ? "All criteria pass.\n" : "Some criteria FAIL.\n");
    return os.str();
  }
};

/// Runs `body` against a fresh criterion, recording wall time and any exception.
template <class F>
CriterionResult run_criterion(int id, std::string suite, std::string title, double limit_seconds, F&& body) {
  CriterionResult r;
  r.id = id;
  r.suite = std::move(suite);
  r.title = std::move(title);
  r.limit_seconds = limit_seconds;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace prymal
