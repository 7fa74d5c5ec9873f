#include "rinvex/verdict.hpp"

#include "rinvex/errors.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace rinvex {

void StrengthParams::validate() const {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "order m must be a positive integer");
  if (!(delta >= 0.0)) throw Error(ErrorCode::InvalidArgument, "delta must be >= 0");
}

namespace {

constexpr std::array<std::pair<Status, const char*>, 11> kStatusNames{{
    {Status::Holds, "Holds"},
    {Status::HoldsVacuously, "HoldsVacuously"},
    {Status::NotStrong, "NotStrong"},
    {Status::Satisfied, "Satisfied"},
    {Status::Consistent, "Consistent"},
    {Status::Equivalent, "Equivalent"},
    {Status::NotApplicable, "NotApplicable"},
    {Status::Violated, "Violated"},
    {Status::TheoremInconsistent, "TheoremInconsistent"},
    {Status::Disagreement, "Disagreement"},
    {Status::Error, "Error"},
}};

}  // namespace

const char* to_string(Status status) {
  for (const auto& [s, name] : kStatusNames) {
    if (s == status) return name;
  }
  return "Error";
}

std::optional<Status> status_from_string(std::string_view name) {
  for (const auto& [s, n] : kStatusNames) {
    if (name == n) return s;
  }
  return std::nullopt;
}

int severity(Status status) {
  switch (status) {
    case Status::Holds:
    case Status::HoldsVacuously:
    case Status::Satisfied:
    case Status::Consistent:
    case Status::Equivalent:
      return 0;
    case Status::NotStrong: return 1;
    case Status::NotApplicable: return 2;
    case Status::Violated: return 3;
    case Status::TheoremInconsistent:
    case Status::Disagreement:
      return 4;
    case Status::Error: return 5;
  }
  return 5;
}

bool is_clean(Status status) { return severity(status) <= 2; }

// Ties keep the first sample so that witnesses are deterministic.
void VerdictBuilder::margin(double value, const Witness& w) {
  if (verdict_.witness.empty() || value < verdict_.worst_margin) {
    verdict_.worst_margin = value;
    verdict_.witness = w;
  }
}

void VerdictBuilder::delta_bound(double value, const Witness& w) {
  if (verdict_.delta_witness.empty() || value < verdict_.delta_hat) {
    verdict_.delta_hat = value;
    verdict_.delta_witness = w;
  }
}

void VerdictBuilder::probe(bool violated) {
  if (!options_.probe_delta) return;
  if (!verdict_.probe_violations) verdict_.probe_violations = 0;
  if (violated) ++*verdict_.probe_violations;
}

Verdict VerdictBuilder::finish_strength() {
  Verdict v = std::move(verdict_);
  if (options_.probe_delta && !v.probe_violations) v.probe_violations = 0;
  const bool no_evidence = v.witness.empty() && v.delta_witness.empty();
  if (no_evidence) {
    v.status = Status::HoldsVacuously;
    v.delta_hat = kInf;
    return v;
  }
  if (v.worst_margin < -options_.tolerance) {
    v.status = Status::Violated;
    v.delta_hat = 0.0;
    return v;
  }
  v.delta_hat = std::max(0.0, v.delta_hat);
  v.status = v.delta_hat > options_.tolerance ? Status::Holds : Status::NotStrong;
  return v;
}

Verdict VerdictBuilder::finish_binary() {
  Verdict v = std::move(verdict_);
  v.delta_hat = kNaN;
  if (v.witness.empty()) {
    v.status = Status::HoldsVacuously;
  } else {
    v.status = v.worst_margin < -options_.tolerance ? Status::Violated : Status::Holds;
  }
  return v;
}

}  // namespace rinvex
