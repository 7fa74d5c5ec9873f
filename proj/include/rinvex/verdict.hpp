#pragma once

#include "rinvex/manifold.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <string>

namespace rinvex {

/// Strength constant delta and order m of every "strongly ... of order m"
/// class. delta = 0 recovers the non-strong definition.
struct StrengthParams {
  double delta = 0.0;
  int m = 2;

  void validate() const;
};

enum class Status {
  Holds,
  HoldsVacuously,
  NotStrong,
  Satisfied,
  Consistent,
  Equivalent,
  NotApplicable,
  Violated,
  TheoremInconsistent,
  Disagreement,
  Error,
};

const char* to_string(Status status);
std::optional<Status> status_from_string(std::string_view name);

/// Higher is worse. Used to compute an overall status.
int severity(Status status);

/// True for statuses that mean "no counterexample was found".
bool is_clean(Status status);

/// The sample tuple behind a margin or a delta estimate.
struct Witness {
  std::optional<Point> u;
  std::optional<Point> v;
  std::optional<double> s;
  std::optional<double> t;

  [[nodiscard]] bool empty() const { return !u && !v; }
};

struct CheckOptions {
  double tolerance = 1e-9;
  /// When set, checkers also count samples violating the raw inequality at
  /// this fixed delta.
  std::optional<double> probe_delta;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Outcome of one sampled check.
///
/// worst_margin is the smallest delta-free slack of the defining inequality
/// (negative means a counterexample at delta = 0); delta_hat is the largest
/// delta consistent with every sample. Predicates with no strength constant
/// report delta_hat = NaN.
struct Verdict {
  Status status = Status::HoldsVacuously;
  double delta_hat = kInf;
  double worst_margin = kInf;
  Witness witness;
  Witness delta_witness;
  std::size_t samples_evaluated = 0;
  std::size_t skipped_degenerate = 0;
  std::size_t antecedent_hits = 0;
  std::optional<std::size_t> probe_violations;

  [[nodiscard]] bool holds_strongly() const { return status == Status::Holds; }
};

/// Running min-reduction of margins and per-sample delta bounds.
class VerdictBuilder {
 public:
  explicit VerdictBuilder(const CheckOptions& options) : options_(options) {}

  void skip_degenerate() { ++verdict_.skipped_degenerate; }
  void count_sample() { ++verdict_.samples_evaluated; }
  void count_antecedent() { ++verdict_.antecedent_hits; }

  void margin(double value, const Witness& w);
  void delta_bound(double value, const Witness& w);
  void probe(bool violated);

  /// Status for an "exists delta > 0" strength predicate.
  [[nodiscard]] Verdict finish_strength();
  /// Status for a predicate without a strength constant.
  [[nodiscard]] Verdict finish_binary();

 private:
  CheckOptions options_;
  Verdict verdict_;
};

}  // namespace rinvex
