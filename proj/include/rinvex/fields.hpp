#pragma once

#include "rinvex/manifold.hpp"

#include <functional>
#include <string>
#include <string_view>

namespace rinvex {

/// Differentiable h: M -> R. The differential, when present, returns the
/// coordinate partials dh/du_i.
class ScalarField {
 public:
  using ValueFn = std::function<double(const Vec&)>;
  using DifferentialFn = std::function<Vec(const Vec&)>;

  ScalarField(std::string name, ValueFn value, DifferentialFn differential = {})
      : name_(std::move(name)), value_(std::move(value)), differential_(std::move(differential)) {}

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] double operator()(const Vec& coords) const { return value_(coords); }
  [[nodiscard]] double operator()(const Point& p) const { return value_(p.coords); }
  [[nodiscard]] bool has_differential() const { return static_cast<bool>(differential_); }
  [[nodiscard]] Vec differential(const Vec& coords) const { return differential_(coords); }

  /// Same function with the analytic differential dropped; forces the
  /// finite-difference path.
  [[nodiscard]] ScalarField without_differential() const { return {name_ + "[fd]", value_}; }

 private:
  std::string name_;
  ValueFn value_;
  DifferentialFn differential_;
};

/// X: M -> TM; the output is based at the input point.
class VectorField {
 public:
  using Fn = std::function<Tangent(const Point&)>;

  VectorField(std::string label, Fn fn) : label_(std::move(label)), fn_(std::move(fn)) {}

  [[nodiscard]] const std::string& label() const { return label_; }
  [[nodiscard]] Tangent operator()(const Point& p) const { return fn_(p); }

 private:
  std::string label_;
  Fn fn_;
};

VectorField gradient_field(const Chart& chart, const ScalarField& h);

/// F: M x M -> R.
class BivariateField {
 public:
  using Fn = std::function<double(const Vec&, const Vec&)>;

  BivariateField(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] double operator()(const Vec& u, const Vec& v) const { return fn_(u, v); }

 private:
  std::string name_;
  Fn fn_;
};

namespace fields {

ScalarField u1_plus_u2_squared();         // u1 + u2^2
ScalarField log_u1_plus_log_u2_cubed();   // ln u1 + (ln u2)^3
ScalarField u1_cubed_plus_log_u2();       // u1^3 + ln u2
ScalarField log_squared_norm();           // (ln u1)^2 + (ln u2)^2
ScalarField squared_norm();               // |u|^2
ScalarField squared_distance_to(Vec center);
ScalarField coordinate(int index);
ScalarField constant(double value);

/// Parses a field name: "u1_plus_u2sq", "log_u1_plus_log_u2_cubed",
/// "u1cubed_plus_log_u2", "log_sqnorm", "sqnorm", "sqdist(1,0)", "coord(0)",
/// "const(3)". Throws SchemaError on anything else.
ScalarField parse(std::string_view spec);

/// Bivariate fields: "sum_sqnorm" |u|^2+|v|^2, "sqdist_uv" |u-v|^2,
/// "v_sqnorm" |v|^2.
BivariateField parse_bivariate(std::string_view spec);

/// Vector fields: "grad" (gradient of a given scalar field), "identity",
/// "neg_identity".
VectorField parse_vector_field(std::string_view spec, const Chart& chart, const ScalarField& h);

}  // namespace fields

}  // namespace rinvex
