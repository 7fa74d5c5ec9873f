#pragma once

#include "rinvex/eta.hpp"
#include "rinvex/fields.hpp"
#include "rinvex/invexity.hpp"
#include "rinvex/sampling.hpp"
#include "rinvex/verdict.hpp"

namespace rinvex {

enum class MonotoneKind { Strong, Pseudo };

/// Nemeth monotonicity:
///   < r'(0), P_{u->v}[X(u)] - X(v) >_v >= 0
/// with r the connecting geodesic r(0) = v, r(1) = u. No strength constant.
Verdict check_monotone_vector_field(const Chart& chart, const VectorField& x, const SampleScheme& scheme,
                                    const CheckOptions& options = {});

/// Strong:  <X(v), eta(u,v)>_v + <X(u), eta(v,u)>_u <= -delta (|eta(u,v)|^m + |eta(v,u)|^m)
/// Pseudo:  <X(u), eta(v,u)>_u >= 0  =>  <X(v), eta(u,v)>_v <= -delta |eta(u,v)|^m
Verdict check_invariant_eta_monotone(const Chart& chart, const VectorField& x, const EtaMap& eta, int m,
                                     MonotoneKind kind, const SampleScheme& scheme,
                                     const CheckOptions& options = {});

/// Runs eta-invexity of h against strong invariant eta-monotonicity of its
/// gradient field on identical samples. Flags:
///   - invex holds but the gradient field is not monotone (always checked);
///   - monotone holds but h is not invex, and pseudo-monotone holds but h is
///     not pseudo invex of type 1 (only for integrable eta maps).
CrossCheckReport cross_check_invex_monotone(const Chart& chart, const ScalarField& h, const EtaMap& eta, int m,
                                            const SampleScheme& scheme, const CheckOptions& options = {});

}  // namespace rinvex
