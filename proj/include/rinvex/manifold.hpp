#pragma once

// Closed-form Riemannian geometry for the built-in charts.
//
// Two charts are supported: the positive orthant of R^2 with metric
// g_ij(u) = delta_ij / (u_i u_j), and Euclidean R^n. On the orthant the map
// w_i = ln(u_i) is an isometry onto Euclidean R^2, so geodesics, distances and
// parallel transport all have closed forms and transport is path independent.

#include <Eigen/Dense>

#include <initializer_list>
#include <string>

namespace rinvex {

using Vec = Eigen::VectorXd;

class ScalarField;

enum class ChartKind { PositiveOrthant2, Euclidean };

struct Point {
  Vec coords;

  [[nodiscard]] int dim() const { return static_cast<int>(coords.size()); }
  [[nodiscard]] double operator[](int i) const { return coords(i); }
};

struct Tangent {
  Point base;
  Vec components;

  [[nodiscard]] int dim() const { return static_cast<int>(components.size()); }
};

Tangent operator*(double scale, const Tangent& x);
Tangent operator+(const Tangent& x, const Tangent& y);
Tangent operator-(const Tangent& x, const Tangent& y);

class Chart {
 public:
  /// Coordinates closer to the boundary than this are rejected.
  static constexpr double kOrthantFloor = 1e-12;

  static Chart positive_orthant2();
  static Chart euclidean(int dim);

  [[nodiscard]] ChartKind kind() const { return kind_; }
  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] std::string name() const;

  [[nodiscard]] bool contains(const Vec& coords) const;

  /// Validating constructors. Throw DomainViolation.
  [[nodiscard]] Point point(Vec coords) const;
  [[nodiscard]] Point point(std::initializer_list<double> coords) const;
  [[nodiscard]] Tangent tangent(const Point& base, Vec components) const;
  [[nodiscard]] Tangent tangent(const Point& base, std::initializer_list<double> components) const;
  [[nodiscard]] Tangent zero(const Point& base) const;

  void require_domain(const Point& p) const;

  /// Diagonal of g(p); both built-in metrics are diagonal.
  [[nodiscard]] Vec metric_diagonal(const Point& p) const;

  [[nodiscard]] double inner(const Point& p, const Tangent& x, const Tangent& y) const;
  [[nodiscard]] double inner(const Tangent& x, const Tangent& y) const;
  [[nodiscard]] double norm(const Tangent& x) const;

  [[nodiscard]] Point exp(const Point& p, const Tangent& x) const;
  [[nodiscard]] Point exp(const Tangent& x) const { return exp(x.base, x); }

  /// Initial velocity of the geodesic r with r(0) = from, r(1) = to.
  [[nodiscard]] Tangent log(const Point& from, const Point& to) const;

  [[nodiscard]] double distance(const Point& a, const Point& b) const;

  /// Parallel transport of x from x.base to `to`. Path independent on both
  /// built-in charts (both are flat).
  [[nodiscard]] Tangent transport(const Tangent& x, const Point& to) const;

  /// Metric dual of a coordinate differential: the tangent G with
  /// <G, w>_p = differential . w for every w.
  [[nodiscard]] Tangent raise(const Point& p, const Vec& differential) const;

  [[nodiscard]] Tangent gradient(const ScalarField& h, const Point& p) const;

  /// Coordinate differential of h at p, analytic when available, else central
  /// differences along coordinate geodesics.
  [[nodiscard]] Vec differential(const ScalarField& h, const Point& p) const;

 private:
  Chart(ChartKind kind, int dim) : kind_(kind), dim_(dim) {}

  void require_base(const Point& p, const Tangent& x) const;

  ChartKind kind_;
  int dim_;
};

/// Position and velocity of a geodesic at one parameter value.
struct GeodesicState {
  Point position;
  Tangent velocity;
};

class Geodesic {
 public:
  Geodesic(Chart chart, Tangent initial_velocity);

  /// The geodesic with r(0) = a and r(1) = b.
  static Geodesic connecting(const Chart& chart, const Point& a, const Point& b);

  [[nodiscard]] const Chart& chart() const { return chart_; }
  [[nodiscard]] const Point& start() const { return velocity_.base; }
  [[nodiscard]] const Tangent& initial_velocity() const { return velocity_; }

  [[nodiscard]] Point position(double t) const;
  [[nodiscard]] Tangent velocity(double t) const;
  [[nodiscard]] GeodesicState eval(double t) const;

  /// P^{t1}_{t0}[x]; x must be based at position(t0).
  [[nodiscard]] Tangent transport(double t0, double t1, const Tangent& x) const;

 private:
  Chart chart_;
  Tangent velocity_;
};

/// True when a and b agree to a relative tolerance of 1e-10.
bool same_point(const Point& a, const Point& b);

}  // namespace rinvex
