#include "rinvex/eta.hpp"

#include "rinvex/errors.hpp"

#include <algorithm>
#include <cmath>

namespace rinvex {

namespace {

constexpr double kRootTolerance = 1e-12;
constexpr int kMaxBisections = 200;

void require_orthant(const Chart& chart, const std::string& name) {
  if (chart.kind() != ChartKind::PositiveOrthant2) {
    throw Error(ErrorCode::InvalidArgument, "eta map " + name + " is defined on positive_orthant2 only");
  }
}

// Bisection on [lo, hi] for a sign change f(lo) * f(hi) <= 0.
template <typename F>
double bisect(F&& f, double lo, double hi) {
  double f_lo = f(lo);
  for (int i = 0; i < kMaxBisections && hi - lo > kRootTolerance; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if ((f_mid <= 0.0) == (f_lo <= 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

EtaMap EtaMap::ex32() {
  return {EtaKind::Ex32, "ex32",
          [](const Chart& chart, const Point&, const Point& v) {
            require_orthant(chart, "ex32");
            return chart.tangent(v, {-1.0 - v[0], -v[1]});
          },
          false};
}

EtaMap EtaMap::ex33() {
  return {EtaKind::Ex33, "ex33",
          [](const Chart& chart, const Point&, const Point& v) {
            require_orthant(chart, "ex33");
            return chart.tangent(v, {-v[0] * v[0], 0.0});
          },
          false};
}

EtaMap EtaMap::ex34() {
  return {EtaKind::Ex34, "ex34",
          [](const Chart& chart, const Point&, const Point& v) {
            require_orthant(chart, "ex34");
            return chart.tangent(v, {-v[0] * v[0], -v[1] * v[1]});
          },
          false};
}

EtaMap EtaMap::euclidean_diff() {
  return {EtaKind::EuclideanDiff, "diff",
          [](const Chart& chart, const Point& u, const Point& v) {
            chart.require_domain(u);
            return chart.tangent(v, u.coords - v.coords);
          },
          true};
}

EtaMap EtaMap::gradient_resolved(const ScalarField& h, int m) {
  if (m < 2) {
    throw Error(ErrorCode::InvalidArgument, "gradient-resolved eta needs m >= 2");
  }
  return {EtaKind::GradientResolved, "grad_resolved",
          [h, m](const Chart& chart, const Point&, const Point& v) {
            const Tangent g = chart.gradient(h, v);
            const double g_norm = chart.norm(g);
            if (g_norm == 0.0) throw Error(ErrorCode::ZeroGradient, "gradient vanishes at v");
            // |eta|^(m-1) = |G| from the fixed-point equation.
            const double t = std::pow(g_norm, 1.0 / (m - 1));
            return (-t / g_norm) * g;
          },
          false};
}

EtaMap EtaMap::invex_constructed(const ScalarField& h, StrengthParams params) {
  params.validate();
  return {EtaKind::Custom, "invex_constructed",
          [h, params](const Chart& chart, const Point& u, const Point& v) {
            return construct_invex_eta(chart, h, params, u, v);
          },
          false};
}

EtaMap EtaMap::custom(std::string name, Evaluator evaluator, bool integrable) {
  return {EtaKind::Custom, std::move(name), std::move(evaluator), integrable};
}

EtaMap EtaMap::parse(std::string_view name, const ScalarField& h, StrengthParams params) {
  if (name == "ex32") return ex32();
  if (name == "ex33") return ex33();
  if (name == "ex34") return ex34();
  if (name == "diff") return euclidean_diff();
  if (name == "grad_resolved") return gradient_resolved(h, params.m);
  if (name == "invex_constructed") return invex_constructed(h, params);
  throw Error(ErrorCode::SchemaError, "unknown eta map '" + std::string(name) + "'");
}

Tangent EtaMap::operator()(const Chart& chart, const Point& u, const Point& v) const {
  chart.require_domain(u);
  chart.require_domain(v);
  return evaluator_(chart, u, v);
}

double directional_derivative(const Chart& chart, const ScalarField& h, const Point& v, const Tangent& w) {
  if (!same_point(v, w.base)) {
    throw Error(ErrorCode::BasePointMismatch, "direction is not based at v");
  }
  if (!h.has_differential()) return directional_derivative_fd(chart, h, v, w);
  return chart.differential(h, v).dot(w.components);
}

double directional_derivative_fd(const Chart& chart, const ScalarField& h, const Point& v, const Tangent& w) {
  if (!same_point(v, w.base)) {
    throw Error(ErrorCode::BasePointMismatch, "direction is not based at v");
  }
  chart.require_domain(v);
  const double step = 1e-6 * std::max(1.0, v.coords.norm());
  const double forward = h(chart.exp(v, step * w));
  const double backward = h(chart.exp(v, -step * w));
  return (forward - backward) / (2.0 * step);
}

PropertyPReport check_property_p(const Chart& chart, const EtaMap& eta, const Point& u, const Point& v,
                                 const std::vector<double>& s_grid, double tolerance) {
  for (double s : s_grid) {
    if (s < 0.0 || s > 1.0) throw Error(ErrorCode::InvalidArgument, "s_grid must lie in [0,1]");
  }
  const Geodesic r = Geodesic::connecting(chart, v, u);
  PropertyPReport report;
  report.tolerance = tolerance;
  bool first = true;
  for (double t : s_grid) {
    const GeodesicState at_t = r.eval(t);
    for (double s : s_grid) {
      const Point r_s = r.position(s);
      const Tangent lhs = (s - t) * at_t.velocity;
      const Tangent rhs = eta(chart, r_s, at_t.position);
      const double residual = chart.norm(lhs - rhs);
      ResidualSample sample{u, v, s, t, residual};
      if (first || residual > report.max_residual) {
        report.max_residual = residual;
        report.worst = sample;
        first = false;
      }
      report.samples.push_back(std::move(sample));
    }
  }
  report.satisfied = report.max_residual <= tolerance;
  return report;
}

ConditionCReport check_condition_c(const Chart& chart, const EtaMap& eta, const Point& u, const Point& v,
                                   const std::vector<double>& s_grid, double tolerance) {
  for (double s : s_grid) {
    if (s < 0.0 || s > 1.0) throw Error(ErrorCode::InvalidArgument, "s_grid must lie in [0,1]");
  }
  const Tangent initial = eta(chart, u, v);
  const Geodesic r(chart, initial);
  const Point r_one = r.position(1.0);
  ConditionCReport report;
  report.tolerance = tolerance;
  bool first = true;
  for (double s : s_grid) {
    const Point r_s = r.position(s);
    const Tangent moved = chart.transport(initial, r_s);
    const double c1 = chart.norm(eta(chart, v, r_s) + s * moved);
    const double c2 = chart.norm(eta(chart, r_one, r_s) - (1.0 - s) * moved);
    ConditionCSample sample{u, v, s, c1, c2};
    report.max_c1 = std::max(report.max_c1, c1);
    report.max_c2 = std::max(report.max_c2, c2);
    if (first || std::max(c1, c2) > std::max(report.worst.c1_residual, report.worst.c2_residual)) {
      report.worst = sample;
      first = false;
    }
    report.samples.push_back(std::move(sample));
  }
  report.satisfied = std::max(report.max_c1, report.max_c2) <= tolerance;
  return report;
}

double solve_invex_norm(double c, double g, double delta, int m) {
  if (!(g > 0.0)) throw Error(ErrorCode::ZeroGradient, "gradient norm must be positive");
  if (m < 1 || delta < 0.0) throw Error(ErrorCode::InvalidArgument, "invalid strength parameters");
  if (c == 0.0) return 0.0;
  if (delta == 0.0) return std::abs(c) / g;

  if (c > 0.0) {
    // t g = c - delta t^m has a unique root below (c/delta)^(1/m).
    const double hi = std::pow(c / delta, 1.0 / m);
    return bisect([&](double t) { return t * g - (c - delta * std::pow(t, m)); }, 0.0, hi);
  }

  // c < 0: t g = delta t^m - c. Take the smallest root when one exists.
  const double abs_c = -c;
  if (m == 1) {
    if (g <= delta) throw Error(ErrorCode::NoRoot, "no t >= 0 solves the invexity equation");
    return abs_c / (g - delta);
  }
  auto f = [&](double t) { return delta * std::pow(t, m) + abs_c - t * g; };
  const double t_min = std::pow(g / (m * delta), 1.0 / (m - 1));
  if (f(t_min) > 0.0) throw Error(ErrorCode::NoRoot, "no t >= 0 solves the invexity equation");
  return bisect(f, 0.0, t_min);
}

Tangent construct_invex_eta(const Chart& chart, const ScalarField& h, StrengthParams params, const Point& u,
                            const Point& v) {
  params.validate();
  const Tangent g = chart.gradient(h, v);
  const double g_norm = chart.norm(g);
  if (g_norm == 0.0) throw Error(ErrorCode::ZeroGradient, "gradient vanishes at v");
  const double c = h(u) - h(v);
  const double t = solve_invex_norm(c, g_norm, params.delta, params.m);
  const double coefficient = (c - params.delta * std::pow(t, params.m)) / (g_norm * g_norm);
  return coefficient * g;
}

}  // namespace rinvex
