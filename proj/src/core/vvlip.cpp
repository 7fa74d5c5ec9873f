#include "rinvex/vvlip.hpp"

#include "rinvex/errors.hpp"
#include "rinvex/invexity.hpp"

#include <algorithm>
#include <cmath>

namespace rinvex {

const char* to_string(DominanceMode mode) { return mode == DominanceMode::Strict ? "strict" : "pareto"; }

DominanceMode dominance_mode_from_string(std::string_view name) {
  if (name == "strict") return DominanceMode::Strict;
  if (name == "pareto") return DominanceMode::Pareto;
  throw Error(ErrorCode::SchemaError, "unknown dominance mode '" + std::string(name) + "'");
}

void MopProblem::validate() const {
  if (objectives.empty()) throw Error(ErrorCode::InvalidArgument, "a MOP needs at least one objective");
  strength.validate();
}

namespace {

// Signed slack of "diffs < 0" under the dominance mode: negative exactly when
// the zero vector is dominated by diffs.
double dominance_slack(const std::vector<double>& diffs, DominanceMode mode, double tol) {
  const double hi = *std::max_element(diffs.begin(), diffs.end());
  if (mode == DominanceMode::Strict) return hi;
  if (hi > tol) return hi;
  const double lo = *std::min_element(diffs.begin(), diffs.end());
  return lo < -tol ? lo : std::max(hi, 0.0);
}

std::vector<Point> with_self(const Point& u_star, const std::vector<Point>& candidates) {
  std::vector<Point> out;
  out.reserve(candidates.size() + 1);
  out.push_back(u_star);
  for (const auto& c : candidates) {
    if (!same_point(c, u_star)) out.push_back(c);
  }
  return out;
}

}  // namespace

Verdict check_strict_minimizer(const MopProblem& problem, const Point& u_star, const std::vector<Point>& candidates,
                               std::optional<double> locality, DominanceMode mode, const CheckOptions& options) {
  problem.validate();
  const Chart& chart = problem.chart;
  chart.require_domain(u_star);
  const int m = problem.strength.m;
  const size_t k = problem.objectives.size();
  std::vector<double> at_star(k);
  for (size_t i = 0; i < k; ++i) at_star[i] = problem.objectives[i](u_star);

  VerdictBuilder builder(options);
  std::vector<double> diffs(k);
  for (const Point& u : with_self(u_star, candidates)) {
    if (locality && !(chart.distance(u, u_star) < *locality)) continue;
    builder.count_sample();
    for (size_t i = 0; i < k; ++i) diffs[i] = problem.objectives[i](u) - at_star[i];
    const double weight = std::pow(chart.norm(problem.eta(chart, u, u_star)), m);
    Witness w;
    w.u = u;
    w.v = u_star;
    const double slack = dominance_slack(diffs, mode, options.tolerance);
    builder.margin(slack, w);
    if (weight > 0.0) {
      // u dominates exactly when delta exceeds the largest per-objective ratio.
      builder.delta_bound(*std::max_element(diffs.begin(), diffs.end()) / weight, w);
    }
    if (options.probe_delta) {
      std::vector<double> shifted(k);
      for (size_t i = 0; i < k; ++i) shifted[i] = diffs[i] - *options.probe_delta * weight;
      builder.probe(dominance_slack(shifted, mode, options.tolerance) < -options.tolerance);
    }
  }
  return builder.finish_strength();
}

Verdict check_vvlip_solution(const MopProblem& problem, const Point& u_star, const std::vector<Point>& candidates,
                             DominanceMode mode, const CheckOptions& options) {
  problem.validate();
  const Chart& chart = problem.chart;
  chart.require_domain(u_star);
  std::vector<Tangent> grads;
  grads.reserve(problem.objectives.size());
  for (const auto& h : problem.objectives) grads.push_back(chart.gradient(h, u_star));

  VerdictBuilder builder(options);
  std::vector<double> pairings(grads.size());
  for (const Point& u : with_self(u_star, candidates)) {
    builder.count_sample();
    const Tangent e = problem.eta(chart, u, u_star);
    for (size_t i = 0; i < grads.size(); ++i) pairings[i] = chart.inner(u_star, grads[i], e);
    Witness w;
    w.u = u;
    w.v = u_star;
    builder.margin(dominance_slack(pairings, mode, options.tolerance), w);
  }
  return builder.finish_binary();
}

ScanResult scan_equivalence(const MopProblem& problem, const std::vector<Point>& grid,
                            const SampleScheme& precondition_scheme, DominanceMode mode,
                            const CheckOptions& options) {
  problem.validate();
  ScanResult result;
  result.grid = grid;
  bool hypothesis = true;
  for (const auto& h : problem.objectives) {
    result.preconditions.push_back(
        check_strongly_eta_invex(problem.chart, h, problem.eta, problem.strength.m, precondition_scheme, options));
    hypothesis = hypothesis && result.preconditions.back().status == Status::Holds;
  }
  if (!hypothesis) {
    result.status = Status::NotApplicable;
    return result;
  }

  for (size_t i = 0; i < grid.size(); ++i) {
    const Verdict minimizer = check_strict_minimizer(problem, grid[i], grid, std::nullopt, mode, options);
    const Verdict vvlip = check_vvlip_solution(problem, grid[i], grid, mode, options);
    const bool is_minimizer = minimizer.status == Status::Holds;
    const bool is_vvlip = vvlip.status == Status::Holds || vvlip.status == Status::HoldsVacuously;
    if (is_minimizer) result.minimizer_set.push_back(i);
    if (is_vvlip) result.vvlip_set.push_back(i);
    if (is_minimizer != is_vvlip) {
      result.disagreements.push_back({i, grid[i], is_minimizer ? "minimizer" : "vvlip",
                                      is_minimizer ? vvlip.witness : minimizer.witness});
    }
  }
  result.status = result.disagreements.empty() ? Status::Equivalent : Status::Disagreement;
  return result;
}

}  // namespace rinvex
