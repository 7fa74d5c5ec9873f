#include "rinvex/monotonicity.hpp"

#include "rinvex/errors.hpp"

#include <cmath>

namespace rinvex {

Verdict check_monotone_vector_field(const Chart& chart, const VectorField& x, const SampleScheme& scheme,
                                    const CheckOptions& options) {
  VerdictBuilder builder(options);
  for (const PointPair& pair : sample_pairs(chart, scheme)) {
    builder.count_sample();
    const Tangent direction = chart.log(pair.v, pair.u);
    const Tangent moved = chart.transport(x(pair.u), pair.v);
    const double pairing = chart.inner(pair.v, direction, moved - x(pair.v));
    Witness w;
    w.u = pair.u;
    w.v = pair.v;
    builder.margin(pairing, w);
  }
  return builder.finish_binary();
}

Verdict check_invariant_eta_monotone(const Chart& chart, const VectorField& x, const EtaMap& eta, int m,
                                     MonotoneKind kind, const SampleScheme& scheme, const CheckOptions& options) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "order m must be positive");
  VerdictBuilder builder(options);
  for (const PointPair& pair : sample_pairs(chart, scheme)) {
    const Tangent e_uv = eta(chart, pair.u, pair.v);
    const Tangent e_vu = eta(chart, pair.v, pair.u);
    const double n_uv = std::pow(chart.norm(e_uv), m);
    const double n_vu = std::pow(chart.norm(e_vu), m);
    const double at_v = chart.inner(pair.v, x(pair.v), e_uv);
    const double at_u = chart.inner(pair.u, x(pair.u), e_vu);
    Witness w;
    w.u = pair.u;
    w.v = pair.v;

    if (kind == MonotoneKind::Strong) {
      const double weight = n_uv + n_vu;
      if (weight == 0.0) {
        builder.skip_degenerate();
        continue;
      }
      builder.count_sample();
      const double slack = -(at_v + at_u);
      builder.margin(slack, w);
      builder.delta_bound(slack / weight, w);
      if (options.probe_delta) builder.probe(slack - *options.probe_delta * weight < -options.tolerance);
    } else {
      if (n_uv == 0.0) {
        builder.skip_degenerate();
        continue;
      }
      builder.count_sample();
      if (at_u >= 0.0) {
        builder.count_antecedent();
        builder.margin(-at_v, w);
        builder.delta_bound(-at_v / n_uv, w);
        if (options.probe_delta) builder.probe(-at_v - *options.probe_delta * n_uv < -options.tolerance);
      }
    }
  }
  return builder.finish_strength();
}

CrossCheckReport cross_check_invex_monotone(const Chart& chart, const ScalarField& h, const EtaMap& eta, int m,
                                            const SampleScheme& scheme, const CheckOptions& options) {
  CrossCheckReport report;
  const VectorField grad = gradient_field(chart, h);
  Verdict invex = check_strongly_eta_invex(chart, h, eta, m, scheme, options);
  Verdict mono = check_invariant_eta_monotone(chart, grad, eta, m, MonotoneKind::Strong, scheme, options);

  if (invex.status == Status::Holds && mono.status == Status::Violated) {
    report.flags.push_back("eta-invex but the gradient field is not strongly invariant eta-monotone");
  }

  if (eta.integrable()) {
    Verdict pseudo_mono = check_invariant_eta_monotone(chart, grad, eta, m, MonotoneKind::Pseudo, scheme, options);
    Verdict pseudo_invex = check_generalized_invex(chart, h, eta, m, GeneralizedKind::Pseudo1, scheme, options);
    if (mono.status == Status::Holds && invex.status == Status::Violated) {
      report.flags.push_back("gradient field strongly monotone but h is not eta-invex");
    }
    if (pseudo_mono.status == Status::Holds && pseudo_invex.status == Status::Violated) {
      report.flags.push_back("gradient field pseudo monotone but h is not pseudo eta-invex of type 1");
    }
    report.verdicts.emplace_back("pseudo_monotone", std::move(pseudo_mono));
    report.verdicts.emplace_back("pseudo1", std::move(pseudo_invex));
  } else {
    report.not_applicable.push_back("monotone => invex (eta not known to be integrable)");
    report.not_applicable.push_back("pseudo monotone => pseudo invex (eta not known to be integrable)");
  }
  report.verdicts.emplace(report.verdicts.begin(), "eta_monotone", std::move(mono));
  report.verdicts.emplace(report.verdicts.begin(), "invex", std::move(invex));
  report.status = report.flags.empty() ? Status::Consistent : Status::TheoremInconsistent;
  return report;
}

}  // namespace rinvex
