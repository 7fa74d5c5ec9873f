#include "rinvex/invexity.hpp"

#include "rinvex/errors.hpp"

#include <algorithm>
#include <cmath>

namespace rinvex {

const char* to_string(GeodesicMode mode) {
  switch (mode) {
    case GeodesicMode::EtaGeodesic: return "EtaGeodesic";
    case GeodesicMode::ConnectingFromV: return "ConnectingFromV";
    case GeodesicMode::ConnectingFromU: return "ConnectingFromU";
  }
  return "EtaGeodesic";
}

GeodesicMode geodesic_mode_from_string(std::string_view name) {
  if (name == "EtaGeodesic") return GeodesicMode::EtaGeodesic;
  if (name == "ConnectingFromV") return GeodesicMode::ConnectingFromV;
  if (name == "ConnectingFromU") return GeodesicMode::ConnectingFromU;
  throw Error(ErrorCode::SchemaError, "unknown geodesic mode '" + std::string(name) + "'");
}

const char* to_string(GeneralizedKind kind) {
  switch (kind) {
    case GeneralizedKind::Pseudo1: return "Pseudo1";
    case GeneralizedKind::Pseudo2: return "Pseudo2";
    case GeneralizedKind::Quasi1: return "Quasi1";
    case GeneralizedKind::Quasi2: return "Quasi2";
  }
  return "Pseudo1";
}

Geodesic preinvex_curve(const Chart& chart, const EtaMap& eta, const Point& u, const Point& v, GeodesicMode mode) {
  switch (mode) {
    case GeodesicMode::EtaGeodesic: return {chart, eta(chart, u, v)};
    case GeodesicMode::ConnectingFromV: return Geodesic::connecting(chart, v, u);
    case GeodesicMode::ConnectingFromU: return Geodesic::connecting(chart, u, v);
  }
  return {chart, eta(chart, u, v)};
}

namespace {

Witness pair_witness(const PointPair& pair, std::optional<double> s = std::nullopt) {
  Witness w;
  w.u = pair.u;
  w.v = pair.v;
  w.s = s;
  return w;
}

// Chord-inequality engine shared by the preinvex and geodesic-convex checks.
// penalty(pair, curve, s) returns the |.|^m factor multiplying delta s(1-s).
template <typename Curve, typename Penalty>
Verdict chord_check(const Chart& chart, const ScalarField& h, const SampleScheme& scheme,
                    const CheckOptions& options, Curve&& curve_for, Penalty&& penalty) {
  VerdictBuilder builder(options);
  for (const PointPair& pair : sample_pairs(chart, scheme)) {
    const double hu = h(pair.u);
    const double hv = h(pair.v);
    const Geodesic r = curve_for(pair);
    for (double s : scheme.s_grid) {
      const double weight = penalty(pair, r, s);
      if (weight == 0.0) {
        builder.skip_degenerate();
        continue;
      }
      builder.count_sample();
      const double slack = s * hu + (1.0 - s) * hv - h(r.position(s));
      const double scale = s * (1.0 - s) * weight;
      const Witness w = pair_witness(pair, s);
      builder.margin(slack, w);
      builder.delta_bound(slack / scale, w);
      if (options.probe_delta) builder.probe(slack - *options.probe_delta * scale < -options.tolerance);
    }
  }
  return builder.finish_strength();
}

}  // namespace

Verdict check_strongly_preinvex(const Chart& chart, const ScalarField& h, const EtaMap& eta, int m,
                                const SampleScheme& scheme, GeodesicMode mode, const CheckOptions& options) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "order m must be positive");
  return chord_check(
      chart, h, scheme, options,
      [&](const PointPair& pair) { return preinvex_curve(chart, eta, pair.u, pair.v, mode); },
      [&](const PointPair& pair, const Geodesic&, double) {
        return std::pow(chart.norm(eta(chart, pair.u, pair.v)), m);
      });
}

Verdict check_strongly_geodesic_convex(const Chart& chart, const ScalarField& h, int m, const SampleScheme& scheme,
                                       const CheckOptions& options) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "order m must be positive");
  return chord_check(
      chart, h, scheme, options, [&](const PointPair& pair) { return Geodesic::connecting(chart, pair.v, pair.u); },
      [&](const PointPair&, const Geodesic& r, double s) { return std::pow(chart.norm(r.velocity(s)), m); });
}

Verdict check_strongly_eta_invex(const Chart& chart, const ScalarField& h, const EtaMap& eta, int m,
                                 const SampleScheme& scheme, const CheckOptions& options) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "order m must be positive");
  VerdictBuilder builder(options);
  for (const PointPair& pair : sample_pairs(chart, scheme)) {
    const Tangent e = eta(chart, pair.u, pair.v);
    const double weight = std::pow(chart.norm(e), m);
    if (weight == 0.0) {
      builder.skip_degenerate();
      continue;
    }
    builder.count_sample();
    const double slack = h(pair.u) - h(pair.v) - directional_derivative(chart, h, pair.v, e);
    const Witness w = pair_witness(pair);
    builder.margin(slack, w);
    builder.delta_bound(slack / weight, w);
    if (options.probe_delta) builder.probe(slack - *options.probe_delta * weight < -options.tolerance);
  }
  return builder.finish_strength();
}

Verdict check_generalized_invex(const Chart& chart, const ScalarField& h, const EtaMap& eta, int m,
                                GeneralizedKind kind, const SampleScheme& scheme, const CheckOptions& options) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "order m must be positive");
  const double tol = options.tolerance;
  VerdictBuilder builder(options);
  for (const PointPair& pair : sample_pairs(chart, scheme)) {
    const Tangent e = eta(chart, pair.u, pair.v);
    const double weight = std::pow(chart.norm(e), m);
    if (weight == 0.0) {
      builder.skip_degenerate();
      continue;
    }
    builder.count_sample();
    const double rise = h(pair.u) - h(pair.v);
    const double dh = directional_derivative(chart, h, pair.v, e);
    const Witness w = pair_witness(pair);
    const std::optional<double> probe = options.probe_delta;

    switch (kind) {
      case GeneralizedKind::Pseudo1:
        // Antecedent is delta-free; every firing sample bounds delta.
        if (dh >= 0.0) {
          builder.count_antecedent();
          builder.margin(rise, w);
          builder.delta_bound(rise / weight, w);
          if (probe) builder.probe(rise - *probe * weight < -tol);
        }
        break;
      case GeneralizedKind::Pseudo2:
        // The antecedent widens with delta; samples with h(u) < h(v) cap it.
        if (dh >= 0.0) {
          builder.count_antecedent();
          builder.margin(rise, w);
        }
        if (rise < -tol) builder.delta_bound(-dh / weight, w);
        if (probe) builder.probe(dh + *probe * weight >= 0.0 && rise < -tol);
        break;
      case GeneralizedKind::Quasi1:
        if (rise <= 0.0) {
          builder.count_antecedent();
          builder.margin(-dh, w);
          builder.delta_bound(-dh / weight, w);
          if (probe) builder.probe(dh + *probe * weight > tol);
        }
        break;
      case GeneralizedKind::Quasi2:
        if (rise <= 0.0) {
          builder.count_antecedent();
          builder.margin(-dh, w);
        }
        if (dh > tol) builder.delta_bound(rise / weight, w);
        if (probe) builder.probe(rise <= *probe * weight && dh > tol);
        break;
    }
  }
  return builder.finish_strength();
}

ClosureReport check_closure_theorems(const Chart& chart, const std::vector<ScalarField>& family,
                                     const std::vector<double>& weights, const EtaMap& eta, int m,
                                     const SampleScheme& scheme, GeodesicMode mode, const CheckOptions& options) {
  if (family.empty()) throw Error(ErrorCode::InvalidArgument, "closure check needs at least one function");
  if (weights.size() != family.size()) {
    throw Error(ErrorCode::InvalidArgument, "closure check needs one weight per function");
  }
  for (double a : weights) {
    if (!(a > 0.0)) throw Error(ErrorCode::InvalidArgument, "closure weights must be positive");
  }

  ClosureReport report;
  bool all_hold = true;
  report.delta_min = kInf;
  for (const ScalarField& h : family) {
    report.members.push_back(check_strongly_preinvex(chart, h, eta, m, scheme, mode, options));
    const Verdict& v = report.members.back();
    all_hold = all_hold && v.status == Status::Holds;
    report.delta_min = std::min(report.delta_min, v.delta_hat);
  }
  double weight_total = 0.0;
  for (double a : weights) weight_total += a;
  report.sum_delta = weight_total * report.delta_min;

  ScalarField sum("weighted_sum", [family, weights](const Vec& u) {
    double total = 0.0;
    for (size_t j = 0; j < family.size(); ++j) total += weights[j] * family[j](u);
    return total;
  });
  ScalarField max("pointwise_max", [family](const Vec& u) {
    double best = -kInf;
    for (const auto& h : family) best = std::max(best, h(u));
    return best;
  });

  if (!all_hold) {
    // Hypothesis fails; still record the derived functions' own verdicts.
    report.sum = check_strongly_preinvex(chart, sum, eta, m, scheme, mode, options);
    report.max = check_strongly_preinvex(chart, max, eta, m, scheme, mode, options);
    report.status = Status::NotApplicable;
    return report;
  }

  CheckOptions at_sum = options;
  at_sum.probe_delta = report.sum_delta;
  report.sum = check_strongly_preinvex(chart, sum, eta, m, scheme, mode, at_sum);
  CheckOptions at_min = options;
  at_min.probe_delta = report.delta_min;
  report.max = check_strongly_preinvex(chart, max, eta, m, scheme, mode, at_min);
  report.sum_violations = report.sum.probe_violations.value_or(0);
  report.max_violations = report.max.probe_violations.value_or(0);
  report.status = (report.sum_violations == 0 && report.max_violations == 0) ? Status::Holds
                                                                             : Status::TheoremInconsistent;
  return report;
}

InfimalReport check_infimal_preinvex(const Chart& chart, const BivariateField& f, const EtaMap& eta, int m,
                                     const SampleScheme& scheme, GeodesicMode mode, const CheckOptions& options) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "order m must be positive");
  InfimalReport report;

  // Joint samples pair the u-pairs with a deterministic permutation of the
  // same pair list for the v-components.
  const auto pairs = sample_pairs(chart, scheme);
  VerdictBuilder joint(options);
  const size_t n = pairs.size();
  for (size_t i = 0; i < n; ++i) {
    const PointPair& up = pairs[i];
    const PointPair& vp = pairs[(i * 7919 + 13) % n];
    const Geodesic r = preinvex_curve(chart, eta, up.u, up.v, mode);
    const Geodesic t = preinvex_curve(chart, eta, vp.u, vp.v, mode);
    const double weight = std::pow(chart.norm(eta(chart, up.u, up.v)), m) +
                          std::pow(chart.norm(eta(chart, vp.u, vp.v)), m);
    const double f0 = f(up.u.coords, vp.u.coords);
    const double f1 = f(up.v.coords, vp.v.coords);
    for (double s : scheme.s_grid) {
      if (weight == 0.0) {
        joint.skip_degenerate();
        continue;
      }
      joint.count_sample();
      const double slack = s * f0 + (1.0 - s) * f1 - f(r.position(s).coords, t.position(s).coords);
      const double scale = s * (1.0 - s) * weight;
      Witness w;
      w.u = up.u;
      w.v = up.v;
      w.s = s;
      joint.margin(slack, w);
      joint.delta_bound(slack / scale, w);
      if (options.probe_delta) joint.probe(slack - *options.probe_delta * scale < -options.tolerance);
    }
  }
  report.joint = joint.finish_strength();

  const auto v_grid = grid_points(chart, scheme);
  if (v_grid.empty()) throw Error(ErrorCode::InvalidArgument, "infimal check needs a non-empty v-grid");
  std::vector<Vec> v_coords;
  v_coords.reserve(v_grid.size());
  for (const auto& p : v_grid) v_coords.push_back(p.coords);
  ScalarField psi("psi(" + f.name() + ")", [f, v_coords](const Vec& u) {
    double best = kInf;
    for (const auto& v : v_coords) best = std::min(best, f(u, v));
    return best;
  });
  report.psi = check_strongly_preinvex(chart, psi, eta, m, scheme, mode, options);

  report.status = report.psi.status;
  if (report.joint.status == Status::Holds && report.psi.status != Status::Holds) {
    report.status = Status::TheoremInconsistent;
  }
  return report;
}

const Verdict& CrossCheckReport::verdict(std::string_view name) const {
  for (const auto& [n, v] : verdicts) {
    if (n == name) return v;
  }
  throw Error(ErrorCode::InvalidArgument, "no verdict named '" + std::string(name) + "'");
}

Verdict check_condition_c_sampled(const Chart& chart, const EtaMap& eta, const SampleScheme& scheme,
                                  const CheckOptions& options) {
  VerdictBuilder builder(options);
  for (const PointPair& pair : sample_pairs(chart, scheme)) {
    const ConditionCReport r = check_condition_c(chart, eta, pair.u, pair.v, scheme.s_grid, options.tolerance);
    for (const auto& sample : r.samples) {
      builder.count_sample();
      builder.margin(-std::max(sample.c1_residual, sample.c2_residual), pair_witness(pair, sample.s));
    }
  }
  Verdict v = builder.finish_binary();
  if (v.status == Status::Holds) v.status = Status::Satisfied;
  return v;
}

Verdict check_property_p_sampled(const Chart& chart, const EtaMap& eta, const SampleScheme& scheme,
                                 const CheckOptions& options) {
  std::vector<double> grid{0.0};
  grid.insert(grid.end(), scheme.s_grid.begin(), scheme.s_grid.end());
  grid.push_back(1.0);
  VerdictBuilder builder(options);
  for (const PointPair& pair : sample_pairs(chart, scheme)) {
    const PropertyPReport r = check_property_p(chart, eta, pair.u, pair.v, grid, options.tolerance);
    for (const auto& sample : r.samples) {
      builder.count_sample();
      Witness w = pair_witness(pair, sample.s);
      w.t = sample.t;
      builder.margin(-sample.residual, w);
    }
  }
  Verdict v = builder.finish_binary();
  if (v.status == Status::Holds) v.status = Status::Satisfied;
  return v;
}

CrossCheckReport cross_check_preinvex_invex(const Chart& chart, const ScalarField& h, const EtaMap& eta, int m,
                                            const SampleScheme& scheme, const CheckOptions& options) {
  CrossCheckReport report;
  Verdict pre = check_strongly_preinvex(chart, h, eta, m, scheme, GeodesicMode::EtaGeodesic, options);
  Verdict inv = check_strongly_eta_invex(chart, h, eta, m, scheme, options);
  Verdict cond = check_condition_c_sampled(chart, eta, scheme, options);
  report.condition_c_satisfied = cond.status == Status::Satisfied;

  if (pre.status == Status::Holds && inv.status == Status::Violated) {
    report.flags.push_back("preinvex holds along the eta-geodesic but eta-invexity is violated");
  }
  if (*report.condition_c_satisfied) {
    if (inv.status == Status::Holds && pre.status == Status::Violated) {
      report.flags.push_back("eta-invexity holds with Condition C but preinvexity is violated");
    }
  } else {
    report.not_applicable.push_back("invex => preinvex (Condition C fails on the samples)");
  }
  report.verdicts.emplace_back("preinvex", std::move(pre));
  report.verdicts.emplace_back("invex", std::move(inv));
  report.verdicts.emplace_back("condition_c", std::move(cond));
  report.status = report.flags.empty() ? Status::Consistent : Status::TheoremInconsistent;
  return report;
}

}  // namespace rinvex
