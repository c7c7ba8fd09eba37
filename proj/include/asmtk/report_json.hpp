#pragma once

// Line-delimited JSON form of a VerificationReport: one object per check
//   {"name", "params", "status", "lhs", "rhs", "elapsed_ms"}
// followed by a final {"summary": {"total", "passed", "failed"}} line.

#include "asmtk/verifier.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace asmtk {

using Json = nlohmann::ordered_json;

inline Json to_json(const CheckResult& r) {
  Json params = Json::object();
  for (const auto& [key, value] : r.params) params[key] = value;
  return Json{{"name", r.name},  {"params", params}, {"status", r.passed ? "pass" : "fail"},
              {"lhs", r.lhs},    {"rhs", r.rhs},     {"elapsed_ms", r.elapsed_ms}};
}

inline Json to_json(const ReportSummary& s) {
  return Json{{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}};
}

inline CheckResult check_from_json(const Json& j) {
  CheckResult r;
  r.name = j.at("name").get<std::string>();
  for (const auto& [key, value] : j.at("params").items()) {
    r.params.emplace_back(key, value.get<std::int64_t>());
  }
  const std::string status = j.at("status").get<std::string>();
  if (status != "pass" && status != "fail") throw std::invalid_argument("bad status: " + status);
  r.passed = status == "pass";
  r.lhs = j.at("lhs").get<std::string>();
  r.rhs = j.at("rhs").get<std::string>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  if (r.passed != (r.lhs == r.rhs)) {
    throw std::invalid_argument("status of check " + r.name + " disagrees with its witnesses");
  }
  return r;
}

inline ReportSummary summary_from_json(const Json& j) {
  ReportSummary s;
  s.total = j.at("total").get<std::size_t>();
  s.passed = j.at("passed").get<std::size_t>();
  s.failed = j.at("failed").get<std::size_t>();
  return s;
}

inline void write_report(std::ostream& out, const VerificationReport& report) {
  for (const auto& check : report.checks) out << to_json(check).dump() << '\n';
  out << Json{{"summary", to_json(report.summary())}}.dump() << '\n';
}

/// Reads what write_report() produced; the summary line must match the
/// tallies of the records before it.
inline VerificationReport read_report(std::istream& in) {
  VerificationReport report;
  std::string line;
  bool saw_summary = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (saw_summary) throw std::invalid_argument("record after summary line");
    const Json j = Json::parse(line);
    if (j.contains("summary")) {
      if (summary_from_json(j.at("summary")) != report.summary()) {
        throw std::invalid_argument("summary does not match the check records");
      }
      saw_summary = true;
    } else {
      report.checks.push_back(check_from_json(j));
    }
  }
  if (!saw_summary) throw std::invalid_argument("report has no summary line");
  return report;
}

}  // namespace asmtk
