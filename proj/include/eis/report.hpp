#pragma once

// Check results and report rendering shared by the suites, the CLI, and the
// acceptance runner.

#include <string>
#include <vector>

#include "json.hpp"

namespace eis {

using json = nlohmann::json;

struct CheckResult {
  std::string id;
  std::string anchor;   // stable identifier of the recorded claim being checked
  std::string status;   // "pass", "fail" or "skip"
  json witness;
  double elapsed_ms = 0;
  bool gating = false;  // integrity check: dependents skip when it fails

  bool failed() const { return status == "fail"; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double elapsed_ms = 0;
  std::string skipped_because;  // nonempty when the whole suite was skipped

  bool any_failed() const {
    for (const auto& c : checks)
      if (c.failed()) return true;
    return false;
  }
  bool gate_failed() const {
    for (const auto& c : checks)
      if (c.gating && c.failed()) return true;
    return false;
  }
};

struct RunReport {
  std::vector<SuiteReport> suites;
  std::uint64_t seed = 0;
  bool pass() const {
    for (const auto& s : suites)
      if (s.any_failed()) return false;
    return true;
  }
};

json to_json(const CheckResult& c);
json to_json(const SuiteReport& s);
json to_json(const RunReport& r);
std::string render_text(const RunReport& r);

}  // namespace eis
