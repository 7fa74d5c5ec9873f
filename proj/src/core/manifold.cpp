#include "rinvex/manifold.hpp"

#include "rinvex/errors.hpp"
#include "rinvex/fields.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rinvex {

namespace {

std::string describe(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v(i);
  }
  os << ')';
  return os.str();
}

}  // namespace

Tangent operator*(double scale, const Tangent& x) { return {x.base, scale * x.components}; }

Tangent operator+(const Tangent& x, const Tangent& y) {
  if (!same_point(x.base, y.base)) {
    throw Error(ErrorCode::BasePointMismatch, "cannot add tangents at different base points");
  }
  return {x.base, x.components + y.components};
}

Tangent operator-(const Tangent& x, const Tangent& y) {
  if (!same_point(x.base, y.base)) {
    throw Error(ErrorCode::BasePointMismatch, "cannot subtract tangents at different base points");
  }
  return {x.base, x.components - y.components};
}

bool same_point(const Point& a, const Point& b) {
  if (a.coords.size() != b.coords.size()) return false;
  for (Eigen::Index i = 0; i < a.coords.size(); ++i) {
    const double scale = std::max({1.0, std::abs(a.coords(i)), std::abs(b.coords(i))});
    if (std::abs(a.coords(i) - b.coords(i)) > 1e-10 * scale) return false;
  }
  return true;
}

Chart Chart::positive_orthant2() { return {ChartKind::PositiveOrthant2, 2}; }

Chart Chart::euclidean(int dim) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "Euclidean chart needs dim >= 1");
  return {ChartKind::Euclidean, dim};
}

std::string Chart::name() const {
  if (kind_ == ChartKind::PositiveOrthant2) return "positive_orthant2";
  return "euclidean:" + std::to_string(dim_);
}

bool Chart::contains(const Vec& coords) const {
  if (coords.size() != dim_) return false;
  if (!coords.allFinite()) return false;
  if (kind_ == ChartKind::PositiveOrthant2) {
    return (coords.array() >= kOrthantFloor).all();
  }
  return true;
}

void Chart::require_domain(const Point& p) const {
  if (!contains(p.coords)) {
    throw Error(ErrorCode::DomainViolation,
                "point " + describe(p.coords) + " is outside " + name());
  }
}

Point Chart::point(Vec coords) const {
  Point p{std::move(coords)};
  require_domain(p);
  return p;
}

Point Chart::point(std::initializer_list<double> coords) const {
  Vec v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (double c : coords) v(i++) = c;
  return point(std::move(v));
}

Tangent Chart::tangent(const Point& base, Vec components) const {
  require_domain(base);
  if (components.size() != dim_) {
    throw Error(ErrorCode::InvalidArgument, "tangent has wrong dimension for " + name());
  }
  return {base, std::move(components)};
}

Tangent Chart::tangent(const Point& base, std::initializer_list<double> components) const {
  Vec v(static_cast<Eigen::Index>(components.size()));
  Eigen::Index i = 0;
  for (double c : components) v(i++) = c;
  return tangent(base, std::move(v));
}

Tangent Chart::zero(const Point& base) const { return tangent(base, Vec::Zero(dim_)); }

void Chart::require_base(const Point& p, const Tangent& x) const {
  if (!same_point(p, x.base)) {
    throw Error(ErrorCode::BasePointMismatch, "tangent based at " + describe(x.base.coords) +
                                                  " used at " + describe(p.coords));
  }
}

Vec Chart::metric_diagonal(const Point& p) const {
  require_domain(p);
  if (kind_ == ChartKind::PositiveOrthant2) {
    return p.coords.array().square().inverse().matrix();
  }
  return Vec::Ones(dim_);
}

double Chart::inner(const Point& p, const Tangent& x, const Tangent& y) const {
  require_domain(p);
  require_base(p, x);
  require_base(p, y);
  if (kind_ == ChartKind::PositiveOrthant2) {
    return (x.components.array() * y.components.array() / p.coords.array().square()).sum();
  }
  return x.components.dot(y.components);
}

double Chart::inner(const Tangent& x, const Tangent& y) const { return inner(x.base, x, y); }

double Chart::norm(const Tangent& x) const { return std::sqrt(inner(x.base, x, x)); }

Point Chart::exp(const Point& p, const Tangent& x) const {
  require_domain(p);
  require_base(p, x);
  if (kind_ == ChartKind::PositiveOrthant2) {
    Vec out = p.coords.array() * (x.components.array() / p.coords.array()).exp();
    return point(std::move(out));
  }
  return point(p.coords + x.components);
}

Tangent Chart::log(const Point& from, const Point& to) const {
  require_domain(from);
  require_domain(to);
  if (kind_ == ChartKind::PositiveOrthant2) {
    Vec v = from.coords.array() * (to.coords.array() / from.coords.array()).log();
    return {from, std::move(v)};
  }
  return {from, to.coords - from.coords};
}

double Chart::distance(const Point& a, const Point& b) const {
  require_domain(a);
  require_domain(b);
  if (kind_ == ChartKind::PositiveOrthant2) {
    return (b.coords.array() / a.coords.array()).log().matrix().norm();
  }
  return (b.coords - a.coords).norm();
}

Tangent Chart::transport(const Tangent& x, const Point& to) const {
  require_domain(x.base);
  require_domain(to);
  if (kind_ == ChartKind::PositiveOrthant2) {
    Vec v = x.components.array() * to.coords.array() / x.base.coords.array();
    return {to, std::move(v)};
  }
  return {to, x.components};
}

Tangent Chart::raise(const Point& p, const Vec& differential) const {
  require_domain(p);
  if (kind_ == ChartKind::PositiveOrthant2) {
    return {p, (p.coords.array().square() * differential.array()).matrix()};
  }
  return {p, differential};
}

Vec Chart::differential(const ScalarField& h, const Point& p) const {
  require_domain(p);
  if (h.has_differential()) return h.differential(p.coords);
  const double step = 1e-6 * std::max(1.0, p.coords.norm());
  Vec d(dim_);
  for (int i = 0; i < dim_; ++i) {
    Tangent e = zero(p);
    e.components(i) = step;
    const double forward = h(exp(p, e));
    e.components(i) = -step;
    const double backward = h(exp(p, e));
    d(i) = (forward - backward) / (2.0 * step);
  }
  return d;
}

Tangent Chart::gradient(const ScalarField& h, const Point& p) const {
  return raise(p, differential(h, p));
}

Geodesic::Geodesic(Chart chart, Tangent initial_velocity)
    : chart_(chart), velocity_(std::move(initial_velocity)) {
  chart_.require_domain(velocity_.base);
}

Geodesic Geodesic::connecting(const Chart& chart, const Point& a, const Point& b) {
  return {chart, chart.log(a, b)};
}

Point Geodesic::position(double t) const { return chart_.exp(start(), t * velocity_); }

Tangent Geodesic::velocity(double t) const {
  // The velocity field of a geodesic is parallel along it.
  return chart_.transport(velocity_, position(t));
}

GeodesicState Geodesic::eval(double t) const {
  Point p = position(t);
  Tangent v = chart_.transport(velocity_, p);
  return {std::move(p), std::move(v)};
}

Tangent Geodesic::transport(double t0, double t1, const Tangent& x) const {
  const Point from = position(t0);
  if (!same_point(from, x.base)) {
    throw Error(ErrorCode::BasePointMismatch, "transported tangent is not based at r(t0)");
  }
  Tangent based{from, x.components};
  return chart_.transport(based, position(t1));
}

}  // namespace rinvex
