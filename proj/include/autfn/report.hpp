#pragma once

// Versioned report document emitted by the CLI.  One row per check, each
// carrying its reference locator and quoted statement, so a report can be
// audited without the source tree.  Timing fields are informational only
// and excluded from any equality or hashing use.

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "autfn/errors.hpp"
#include "autfn/relations.hpp"
#include "json.hpp"

namespace autfn {

inline constexpr const char* kToolVersion = "0.1.0";

struct ReportDocument {
  std::string version = kToolVersion;
  std::string command;
  std::vector<CheckRecord> checks;  // sorted by id
  int passed = 0;
  int failed = 0;
  int skipped = 0;

  bool ok() const { return failed == 0; }
  int exit_code() const { return failed == 0 ? 0 : 1; }
};

inline ReportDocument make_report(std::string command, std::vector<CheckRecord> checks) {
  std::sort(checks.begin(), checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < checks.size(); ++i)
    if (checks[i - 1].id == checks[i].id)
      throw error("duplicate check id '" + checks[i].id + "'");
  ReportDocument doc;
  doc.command = std::move(command);
  for (const CheckRecord& r : checks) {
    if (r.status == "pass") ++doc.passed;
    else if (r.status == "fail") ++doc.failed;
    else if (r.status == "skip") ++doc.skipped;
    else throw error("bad check status '" + r.status + "'");
  }
  doc.checks = std::move(checks);
  return doc;
}

inline ReportDocument make_report(std::string command, const CheckReport& run) {
  return make_report(std::move(command), run.records);
}

/// Copy with the timing fields zeroed; use this before comparing documents.
inline ReportDocument strip_timing(ReportDocument doc) {
  for (CheckRecord& r : doc.checks) r.millis = 0.0;
  return doc;
}

inline nlohmann::json report_to_json(const ReportDocument& doc) {
  nlohmann::json rows = nlohmann::json::array();
  for (const CheckRecord& r : doc.checks) {
    nlohmann::json row = {{"id", r.id},
                          {"paper_ref", r.ref},
                          {"quote", r.quote},
                          {"status", r.status},
                          {"millis", r.millis}};
    if (!r.witness.empty()) row["witness"] = r.witness;
    rows.push_back(std::move(row));
  }
  return nlohmann::json{
      {"version", doc.version},
      {"command", doc.command},
      {"checks", std::move(rows)},
      {"summary",
       {{"passed", doc.passed}, {"failed", doc.failed}, {"skipped", doc.skipped}}}};
}

inline ReportDocument report_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw error("report must be a JSON object");
  for (const char* key : {"version", "command", "checks", "summary"})
    if (!j.contains(key)) throw error(std::string("report misses '") + key + "'");
  if (!j["version"].is_string() || !j["command"].is_string() || !j["checks"].is_array() ||
      !j["summary"].is_object())
    throw error("report fields have the wrong types");

  std::vector<CheckRecord> checks;
  for (const auto& row : j["checks"]) {
    for (const char* key : {"id", "paper_ref", "quote", "status", "millis"})
      if (!row.contains(key)) throw error(std::string("check row misses '") + key + "'");
    CheckRecord r;
    r.id = row["id"].get<std::string>();
    r.ref = row["paper_ref"].get<std::string>();
    r.quote = row["quote"].get<std::string>();
    r.status = row["status"].get<std::string>();
    r.millis = row["millis"].get<double>();
    if (row.contains("witness")) r.witness = row["witness"].get<std::string>();
    checks.push_back(std::move(r));
  }

  ReportDocument doc = make_report(j["command"].get<std::string>(), std::move(checks));
  doc.version = j["version"].get<std::string>();
  const auto& s = j["summary"];
  if (s.value("passed", -1) != doc.passed || s.value("failed", -1) != doc.failed ||
      s.value("skipped", -1) != doc.skipped)
    throw error("report summary disagrees with its rows");
  return doc;
}

inline std::string report_to_text(const ReportDocument& doc) {
  std::ostringstream out;
  out << "autfn " << doc.version << "\n";
  out << "command: " << doc.command << "\n";
  for (const CheckRecord& r : doc.checks) {
    out << r.status;
    for (std::size_t pad = r.status.size(); pad < 5; ++pad) out << ' ';
    out << "  " << r.id << "  [" << r.ref << "]";
    if (r.millis > 0.0) out << "  " << r.millis << "ms";
    out << "\n";
    if (r.status == "fail") {
      out << "       quote: " << r.quote << "\n";
      if (!r.witness.empty()) out << "       witness: " << r.witness << "\n";
    }
  }
  out << "summary: " << doc.passed << " passed, " << doc.failed << " failed, "
      << doc.skipped << " skipped\n";
  return out.str();
}

}  // namespace autfn
