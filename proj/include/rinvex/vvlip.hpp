#pragma once

// Strict eta-minimizers of order m for a multi-objective problem
// min H(u) = (h_1(u), ..., h_k(u)), solutions of the vector variational-like
// inequality <grad h_i(u*), eta(u, u*)> not-less-than 0, and a grid scan
// comparing the two solution sets.
//
// All solution sets here are relative to the candidate points supplied: a
// point is a minimizer when no candidate dominates it.

#include "rinvex/eta.hpp"
#include "rinvex/fields.hpp"
#include "rinvex/sampling.hpp"
#include "rinvex/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rinvex {

/// How a vector a "is less than" a vector b.
enum class DominanceMode {
  Strict,  // a_i < b_i for every i
  Pareto,  // a_i <= b_i for every i, with at least one strict
};

const char* to_string(DominanceMode mode);
DominanceMode dominance_mode_from_string(std::string_view name);

struct MopProblem {
  Chart chart;
  std::vector<ScalarField> objectives;
  EtaMap eta;
  StrengthParams strength;

  void validate() const;
};

/// Holds with delta_hat = the largest delta for which no candidate u
/// satisfies H(u) < H(u*) + delta |eta(u,u*)|^m. The point u* itself is
/// always a candidate. With a locality radius only candidates in the open
/// metric ball B(u*, radius) are used.
Verdict check_strict_minimizer(const MopProblem& problem, const Point& u_star, const std::vector<Point>& candidates,
                               std::optional<double> locality = std::nullopt,
                               DominanceMode mode = DominanceMode::Strict, const CheckOptions& options = {});

/// Holds when no candidate u makes (<grad h_i(u*), eta(u,u*)>)_i < 0.
Verdict check_vvlip_solution(const MopProblem& problem, const Point& u_star, const std::vector<Point>& candidates,
                             DominanceMode mode = DominanceMode::Strict, const CheckOptions& options = {});

struct ScanDisagreement {
  std::size_t index = 0;
  Point point;
  /// "minimizer" or "vvlip": the predicate that accepted the point.
  std::string claimed_by;
  /// Witness of the predicate that rejected it.
  Witness witness;
};

struct ScanResult {
  std::vector<Point> grid;
  std::vector<std::size_t> minimizer_set;
  std::vector<std::size_t> vvlip_set;
  std::vector<ScanDisagreement> disagreements;
  /// Strong eta-invexity of each objective, the theorem's hypothesis.
  std::vector<Verdict> preconditions;
  Status status = Status::NotApplicable;
};

/// Classifies every grid point by both predicates, each using the full grid
/// as candidates. NotApplicable unless every objective is strongly eta-invex
/// of order m on precondition_scheme.
ScanResult scan_equivalence(const MopProblem& problem, const std::vector<Point>& grid,
                            const SampleScheme& precondition_scheme, DominanceMode mode = DominanceMode::Strict,
                            const CheckOptions& options = {});

}  // namespace rinvex
