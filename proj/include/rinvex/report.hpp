#pragma once

// Suite execution and the JSON report document.

#include "rinvex/problem.hpp"
#include "rinvex/verdict.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace rinvex {

inline constexpr const char* kReportSchema = "rinvex.report/1";
inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitUnexpected = 1,
  kExitConfig = 2,
  kExitIo = 3,
};

struct CheckRecord {
  std::string id;
  std::string label;
  std::string definition;
  Status status = Status::Error;
  double delta_hat = kNaN;
  double worst_margin = kNaN;
  Witness witness;
  std::size_t samples_evaluated = 0;
  std::size_t skipped_degenerate = 0;
  double wall_time_ms = 0.0;
  std::optional<Status> expected;
  bool as_expected = false;
  /// Check-specific extras: sub-verdicts, flags, solution sets.
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::string error;
};

struct ReportDocument {
  std::string schema = kReportSchema;
  std::string tool_version = kToolVersion;
  std::string timestamp;
  nlohmann::ordered_json problem = nlohmann::ordered_json::object();
  std::vector<CheckRecord> checks;
  Status overall_status = Status::HoldsVacuously;
  bool expectations_met = true;
  int exit_code = kExitOk;

  [[nodiscard]] nlohmann::ordered_json to_json() const;
  /// Pretty-printed JSON with a trailing newline.
  [[nodiscard]] std::string dump() const;
};

/// Runs one suite item. Check errors end up in the record.
CheckRecord run_check(const ProblemInstance& problem, const CheckItem& item);

/// Runs the suite in declared order and fills in the overall status and
/// exit code.
ReportDocument run_suite(const ProblemInstance& problem);

/// Inverse of ReportDocument::to_json. Throws SchemaError.
ReportDocument report_from_json(const nlohmann::ordered_json& j);
ReportDocument parse_report(std::string_view text);

/// One row per check with a witness: check,status,worst_margin,u,v,s,t.
std::string witnesses_csv(const ReportDocument& report);

/// Worst per-check status by severity; HoldsVacuously for an empty list.
Status overall_status(const std::vector<CheckRecord>& checks);

}  // namespace rinvex
