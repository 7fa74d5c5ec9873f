#pragma once

// Sampling verdicts for the strongly preinvex / eta-invex function classes of
// order m, their generalized (pseudo/quasi) variants, and numerical checks of
// the closure, infimal, and preinvex <-> invex relations between them.

#include "rinvex/eta.hpp"
#include "rinvex/fields.hpp"
#include "rinvex/sampling.hpp"
#include "rinvex/verdict.hpp"

#include <string>
#include <vector>

namespace rinvex {

/// Which curve r_{u,v} the preinvexity inequality is evaluated along.
enum class GeodesicMode {
  EtaGeodesic,      // r(s) = exp_v(s eta(u,v))
  ConnectingFromV,  // r(0) = v, r(1) = u
  ConnectingFromU,  // r(0) = u, r(1) = v
};

enum class GeneralizedKind { Pseudo1, Pseudo2, Quasi1, Quasi2 };

const char* to_string(GeodesicMode mode);
GeodesicMode geodesic_mode_from_string(std::string_view name);
const char* to_string(GeneralizedKind kind);

/// The curve used for the pair (u, v) in the given mode.
Geodesic preinvex_curve(const Chart& chart, const EtaMap& eta, const Point& u, const Point& v, GeodesicMode mode);

/// h(r(s)) <= s h(u) + (1-s) h(v) - delta s(1-s) |eta(u,v)|_v^m.
Verdict check_strongly_preinvex(const Chart& chart, const ScalarField& h, const EtaMap& eta, int m,
                                const SampleScheme& scheme, GeodesicMode mode = GeodesicMode::EtaGeodesic,
                                const CheckOptions& options = {});

/// h(r(s)) <= s h(u) + (1-s) h(v) - delta s(1-s) |r'(s)|^m along the
/// connecting geodesic r(0) = v, r(1) = u.
Verdict check_strongly_geodesic_convex(const Chart& chart, const ScalarField& h, int m, const SampleScheme& scheme,
                                       const CheckOptions& options = {});

/// h(u) >= h(v) + dh_v(eta(u,v)) + delta |eta(u,v)|_v^m.
Verdict check_strongly_eta_invex(const Chart& chart, const ScalarField& h, const EtaMap& eta, int m,
                                 const SampleScheme& scheme, const CheckOptions& options = {});

/// Pseudo1: dh >= 0               => h(u) >= h(v) + delta |eta|^m
/// Pseudo2: dh + delta |eta|^m >= 0 => h(u) >= h(v)
/// Quasi1:  h(u) <= h(v)           => dh + delta |eta|^m <= 0
/// Quasi2:  h(u) <= h(v) + delta |eta|^m => dh <= 0
Verdict check_generalized_invex(const Chart& chart, const ScalarField& h, const EtaMap& eta, int m,
                                GeneralizedKind kind, const SampleScheme& scheme, const CheckOptions& options = {});

struct ClosureReport {
  std::vector<Verdict> members;
  double delta_min = 0.0;
  /// delta' = sum_j a_j delta_min, the constant claimed for the weighted sum.
  double sum_delta = 0.0;
  Verdict sum;
  Verdict max;
  std::size_t sum_violations = 0;
  std::size_t max_violations = 0;
  Status status = Status::NotApplicable;
};

/// Weighted sums (a_j > 0) and pointwise maxima of strongly preinvex
/// functions are strongly preinvex; checked at delta' and delta_min on the
/// members' own samples.
ClosureReport check_closure_theorems(const Chart& chart, const std::vector<ScalarField>& family,
                                     const std::vector<double>& weights, const EtaMap& eta, int m,
                                     const SampleScheme& scheme, GeodesicMode mode = GeodesicMode::EtaGeodesic,
                                     const CheckOptions& options = {});

struct InfimalReport {
  /// Joint preinvexity of F on M x M with |(a,b)|^m = |a|^m + |b|^m.
  Verdict joint;
  /// Preinvexity of Psi(u) = min over the v-grid of F(u, v).
  Verdict psi;
  Status status = Status::NotApplicable;
};

/// Psi(u) = min_v F(u, v) is strongly preinvex when F is jointly so.
InfimalReport check_infimal_preinvex(const Chart& chart, const BivariateField& f, const EtaMap& eta, int m,
                                     const SampleScheme& scheme, GeodesicMode mode = GeodesicMode::EtaGeodesic,
                                     const CheckOptions& options = {});

/// Outcome of running two checkers on identical samples and comparing them
/// against a theorem's stated direction.
struct CrossCheckReport {
  std::vector<std::pair<std::string, Verdict>> verdicts;
  std::vector<std::string> flags;
  std::vector<std::string> not_applicable;
  std::optional<bool> condition_c_satisfied;
  Status status = Status::Consistent;

  [[nodiscard]] const Verdict& verdict(std::string_view name) const;
};

/// Preinvex (eta-geodesic) => invex always; invex => preinvex when Condition C
/// holds on every sampled pair.
CrossCheckReport cross_check_preinvex_invex(const Chart& chart, const ScalarField& h, const EtaMap& eta, int m,
                                            const SampleScheme& scheme, const CheckOptions& options = {});

/// Condition C over every sampled pair and s in the scheme's s_grid.
Verdict check_condition_c_sampled(const Chart& chart, const EtaMap& eta, const SampleScheme& scheme,
                                  const CheckOptions& options = {});

/// Property (P) over every sampled pair; (s, t) range over s_grid plus 0, 1.
Verdict check_property_p_sampled(const Chart& chart, const EtaMap& eta, const SampleScheme& scheme,
                                 const CheckOptions& options = {});

}  // namespace rinvex
