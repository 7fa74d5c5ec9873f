#pragma once

// eta-maps, directional derivatives along them, and the two structural
// conditions (property (P) and Condition C) that relate an eta-map to
// geodesics.

#include "rinvex/fields.hpp"
#include "rinvex/manifold.hpp"
#include "rinvex/verdict.hpp"

#include <functional>
#include <string>
#include <vector>

namespace rinvex {

enum class EtaKind {
  Ex32,              // (-1 - v1, -v2)
  Ex33,              // (-v1^2, 0)
  Ex34,              // (-v1^2, -v2^2)
  EuclideanDiff,     // u - v
  GradientResolved,  // -t G/|G| with t = |G|^(1/(m-1)), G = grad h(v)
  Custom,
};

/// eta(u, v), a tangent vector at v.
class EtaMap {
 public:
  using Evaluator = std::function<Tangent(const Chart&, const Point& u, const Point& v)>;

  static EtaMap ex32();
  static EtaMap ex33();
  static EtaMap ex34();
  static EtaMap euclidean_diff();
  /// Resolution of eta(u,v) = -(|eta|^m / |dh_v|^2) dh_v for m >= 2.
  static EtaMap gradient_resolved(const ScalarField& h, int m);
  /// eta(u,v) built pointwise by construct_invex_eta.
  static EtaMap invex_constructed(const ScalarField& h, StrengthParams params);
  static EtaMap custom(std::string name, Evaluator evaluator, bool integrable = false);

  /// "ex32", "ex33", "ex34", "diff", "grad_resolved" (needs h and m),
  /// "invex_constructed" (needs h, m, delta).
  static EtaMap parse(std::string_view name, const ScalarField& h, StrengthParams params);

  [[nodiscard]] EtaKind kind() const { return kind_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  /// Whether the map is known to admit curves with property (P). Only the
  /// displacement map u - v is flagged.
  [[nodiscard]] bool integrable() const { return integrable_; }

  [[nodiscard]] Tangent operator()(const Chart& chart, const Point& u, const Point& v) const;

 private:
  EtaMap(EtaKind kind, std::string name, Evaluator evaluator, bool integrable)
      : kind_(kind), name_(std::move(name)), evaluator_(std::move(evaluator)), integrable_(integrable) {}

  EtaKind kind_;
  std::string name_;
  Evaluator evaluator_;
  bool integrable_;
};

/// d/dt h(exp_v(t w)) at t = 0. Analytic when h carries a differential.
double directional_derivative(const Chart& chart, const ScalarField& h, const Point& v, const Tangent& w);

/// Same quantity by central differences along the geodesic t -> exp_v(t w).
double directional_derivative_fd(const Chart& chart, const ScalarField& h, const Point& v, const Tangent& w);

struct ResidualSample {
  Point u;
  Point v;
  double s = 0.0;
  double t = 0.0;
  double residual = 0.0;
};

/// Residuals of r'(t)(s - t) = eta(r(s), r(t)) along the connecting geodesic
/// with r(0) = v, r(1) = u.
struct PropertyPReport {
  std::vector<ResidualSample> samples;
  double max_residual = 0.0;
  ResidualSample worst;
  double tolerance = 1e-9;
  bool satisfied = true;
};

struct ConditionCSample {
  Point u;
  Point v;
  double s = 0.0;
  double c1_residual = 0.0;
  double c2_residual = 0.0;
};

/// Residuals of
///   C1: eta(v, r(s)) = -s P_{0->s}[eta(u,v)]
///   C2: eta(r(1), r(s)) = (1-s) P_{0->s}[eta(u,v)]
/// along r(s) = exp_v(s eta(u,v)). Norms are taken at r(s).
struct ConditionCReport {
  std::vector<ConditionCSample> samples;
  double max_c1 = 0.0;
  double max_c2 = 0.0;
  ConditionCSample worst;
  double tolerance = 1e-9;
  bool satisfied = true;
};

PropertyPReport check_property_p(const Chart& chart, const EtaMap& eta, const Point& u, const Point& v,
                                 const std::vector<double>& s_grid, double tolerance = 1e-9);

ConditionCReport check_condition_c(const Chart& chart, const EtaMap& eta, const Point& u, const Point& v,
                                   const std::vector<double>& s_grid, double tolerance = 1e-9);

/// Solves eta = ((c - delta t^m) / |G|^2) G with |eta| = t, where
/// G = grad h(v) and c = h(u) - h(v). The result satisfies
/// h(u) = h(v) + <G, eta> + delta |eta|^m.
/// Throws ZeroGradient when G = 0 and NoRoot when no t >= 0 exists.
Tangent construct_invex_eta(const Chart& chart, const ScalarField& h, StrengthParams params, const Point& u,
                            const Point& v);

/// The scalar equation behind construct_invex_eta: returns t >= 0 with
/// t g = |c - delta t^m|, or throws NoRoot.
double solve_invex_norm(double c, double g, double delta, int m);

}  // namespace rinvex
