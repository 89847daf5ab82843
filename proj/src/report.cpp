#include "eis/report.hpp"

#include <sstream>

namespace eis {

json to_json(const CheckResult& c) {
  json j;
  j["id"] = c.id;
  j["anchor"] = c.anchor;
  j["status"] = c.status;
  if (!c.witness.is_null()) j["witness"] = c.witness;
  j["elapsed_ms"] = c.elapsed_ms;
  return j;
}

json to_json(const SuiteReport& s) {
  json j;
  j["suite"] = s.suite;
  j["elapsed_ms"] = s.elapsed_ms;
  if (!s.skipped_because.empty()) j["skipped_because"] = s.skipped_because;
  j["checks"] = json::array();
  for (const auto& c : s.checks) j["checks"].push_back(to_json(c));
  bool pass = !s.any_failed();
  j["status"] = s.skipped_because.empty() ? (pass ? "pass" : "fail") : "skip";
  return j;
}

json to_json(const RunReport& r) {
  json j;
  j["seed"] = r.seed;
  j["status"] = r.pass() ? "pass" : "fail";
  j["suites"] = json::array();
  for (const auto& s : r.suites) j["suites"].push_back(to_json(s));
  return j;
}

std::string render_text(const RunReport& r) {
  std::ostringstream os;
  for (const auto& s : r.suites) {
    os << "== suite " << s.suite;
    if (!s.skipped_because.empty()) {
      os << " [skipped: " << s.skipped_because << "]\n";
      continue;
    }
    os << " (" << s.elapsed_ms << " ms)\n";
    for (const auto& c : s.checks) {
      os << "  [" << c.status << "] " << c.id << "  {" << c.anchor << "}";
      if (!c.witness.is_null()) os << "  " << c.witness.dump();
      os << "\n";
    }
  }
  os << (r.pass() ? "RESULT: pass" : "RESULT: fail") << " (seed " << r.seed << ")\n";
  return os.str();
}

}  // namespace eis
