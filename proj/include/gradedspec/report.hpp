#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gradedspec/suites.hpp"

namespace gradedspec {

struct Totals {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t vacuous = 0;
  std::size_t skipped = 0;
};

inline Totals totals(const std::vector<SuiteResult>& rows) {
  Totals t;
  for (const auto& r : rows) {
    switch (r.status) {
      case Status::Pass: ++t.pass; break;
      case Status::Fail: ++t.fail; break;
      case Status::Vacuous: ++t.vacuous; break;
      case Status::Skipped: ++t.skipped; break;
    }
  }
  return t;
}

inline int exit_code(const std::vector<SuiteResult>& rows) { return totals(rows).fail == 0 ? 0 : 1; }

inline Json report_json(const std::vector<SuiteResult>& rows, std::optional<std::uint64_t> seed,
                        const std::vector<std::string>& notes = {}) {
  Json j = Json::object();
  j["version"] = 1;
  if (seed) j["seed"] = *seed;
  Json results = Json::array();
  for (const auto& r : rows) {
    Json row = Json::object();
    row["suite"] = r.suite;
    row["instance"] = r.instance;
    row["status"] = std::string(to_string(r.status));
    if (r.status == Status::Fail) row["counterexample"] = r.counterexample;
    row["millis"] = r.millis;
    results.push_back(std::move(row));
  }
  j["results"] = std::move(results);
  const auto t = totals(rows);
  j["totals"] = Json{{"pass", t.pass}, {"fail", t.fail}, {"vacuous", t.vacuous}, {"skipped", t.skipped}};
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

/// Aligned plain-text table, one row per result, followed by the totals.
inline std::string report_text(const std::vector<SuiteResult>& rows, const std::vector<std::string>& notes = {}) {
  std::size_t w_suite = 5, w_inst = 8, w_status = 6;
  for (const auto& r : rows) {
    w_suite = std::max(w_suite, r.suite.size());
    w_inst = std::max(w_inst, r.instance.size());
    w_status = std::max(w_status, to_string(r.status).size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
  std::ostringstream out;
  out << pad("suite", w_suite) << pad("instance", w_inst) << pad("status", w_status) << "detail\n";
  for (const auto& r : rows) {
    std::string detail = r.note;
    if (r.status == Status::Fail) detail = r.counterexample.dump();
    if (r.millis > 0) detail += (detail.empty() ? "" : " ") + std::to_string(r.millis) + " ms";
    out << pad(r.suite, w_suite) << pad(r.instance, w_inst) << pad(std::string(to_string(r.status)), w_status)
        << detail << "\n";
  }
  const auto t = totals(rows);
  out << "\ntotals: pass " << t.pass << ", fail " << t.fail << ", vacuous " << t.vacuous << ", skipped " << t.skipped
      << "\n";
  for (const auto& n : notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace gradedspec
