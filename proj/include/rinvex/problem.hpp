#pragma once

// Problem instances: the built-in registry, JSON / key-value config
// ingestion, and command-line overrides.

#include "rinvex/eta.hpp"
#include "rinvex/fields.hpp"
#include "rinvex/invexity.hpp"
#include "rinvex/sampling.hpp"
#include "rinvex/verdict.hpp"
#include "rinvex/vvlip.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rinvex {

/// One entry of a problem's suite.
struct CheckItem {
  std::string check;
  std::optional<GeodesicMode> geodesic_mode;
  SampleSource samples = SampleSource::Box;
  std::optional<Status> expect;
  /// Index into the objectives for single-function checks.
  int objective = 0;

  /// "preinvex[ConnectingFromU,explicit]" style display name.
  [[nodiscard]] std::string label() const;
};

/// Identifiers accepted in suites, in canonical order.
const std::vector<std::string>& known_checks();

/// Human-readable statement of the inequality a check tests.
std::string check_definition(std::string_view check);

/// "positive_orthant2" or "euclidean:N". Throws SchemaError.
Chart chart_from_name(std::string_view name);

struct ProblemInstance {
  std::string name;
  std::string description;
  Chart chart = Chart::euclidean(2);
  std::vector<std::string> objectives;
  std::vector<std::string> family;  // closure family; empty means objectives
  std::vector<double> weights;      // closure weights; empty means all ones
  std::string eta = "diff";
  std::string vector_field = "grad";
  std::optional<std::string> bivariate;
  StrengthParams strength;
  bool delta_given = false;
  SampleScheme scheme;
  std::optional<Vec> u_star;
  std::optional<double> locality;
  int scan_points = 21;
  std::vector<CheckItem> suite;
  /// Cleared when the suite is replaced by the caller.
  bool expectations_active = true;
  double tolerance = 1e-9;
  std::optional<GeodesicMode> geodesic_override;
  DominanceMode dominance = DominanceMode::Strict;

  [[nodiscard]] ScalarField objective(int index) const;
  [[nodiscard]] std::vector<ScalarField> objective_fields() const;
  [[nodiscard]] std::vector<ScalarField> family_fields() const;
  [[nodiscard]] EtaMap eta_map(int objective_index = 0) const;
  [[nodiscard]] MopProblem mop() const;
  [[nodiscard]] CheckOptions options() const;

  /// Resolves every name and checks the scheme against the chart. Throws
  /// SchemaError / DomainViolation / UnknownProblem.
  void validate() const;

  [[nodiscard]] nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& builtin_problem_names();

/// Throws UnknownProblem.
ProblemInstance load_builtin(std::string_view name);

/// Accepts a JSON object, or key = value lines. A "base" key starts from a
/// built-in problem. Throws SchemaError with line or field diagnostics.
ProblemInstance load_config(std::string_view text);

/// Built-in name, or config text.
ProblemInstance load_problem(std::string_view source);

// Overrides applied after loading; each re-validates what it touches.
void set_seed(ProblemInstance& p, std::uint64_t seed);
void set_grid(ProblemInstance& p, int points_per_axis);
/// "lo,hi" for every axis or "lo1,hi1,lo2,hi2,...".
void set_box(ProblemInstance& p, std::string_view spec);
void set_order(ProblemInstance& p, int m);
void set_delta(ProblemInstance& p, double delta);
void set_tolerance(ProblemInstance& p, double tolerance);
void set_geodesic_mode(ProblemInstance& p, std::string_view mode);
void set_dominance_mode(ProblemInstance& p, std::string_view mode);
/// Comma separated check ids, optionally "id:GeodesicMode". Entries matching
/// a declared item reuse its options. Disables declared expectations.
void set_suite(ProblemInstance& p, std::string_view csv);

}  // namespace rinvex
