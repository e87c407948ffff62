#pragma once

// Serialization of analysis results: a JSON document format that round-trips
// losslessly, a human-readable text rendering, and the CSV writer for sweep
// tables.

#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "powsum/enumerate.hpp"
#include "powsum/topology.hpp"
#include "powsum/verify.hpp"

namespace powsum {

// Top-level document emitted by the command line tool. Exactly one of the
// optional sections is present per command (analyze fills only `regime`,
// verify adds `verification`, topology adds `components`).
struct ReportDocument {
  std::string schema = "powsum.report/1";
  std::string command;  // echo of the invoking subcommand
  RegimeReport regime_report;
  std::optional<VerificationReport> verification;
  std::optional<ComponentEstimate> components;
  std::string summary;  // one-line census, e.g. "110 critical points: ..."
};

// One-line census for a report: totals, class counts, chi/genus when
// defined.
std::string summary_line(const RegimeReport& report);

// JSON (de)serialization. Doubles survive a write/parse round trip exactly.
nlohmann::json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::json& j);

// Human-readable rendering of the same content.
std::string render_text(const ReportDocument& doc);

// Sweep table as CSV: header then one row per grid level, columns
// c, regime, n_orbits, n_min, n_saddle, n_max, n_singular, chi, genus,
// p4_values (semicolon-separated). Empty cells for undefined chi/genus.
void write_sweep_csv(const SweepResult& sweep, std::ostream& out);

}  // namespace powsum
