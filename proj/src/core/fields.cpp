#include "rinvex/fields.hpp"

#include "rinvex/errors.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

namespace rinvex {

VectorField gradient_field(const Chart& chart, const ScalarField& h) {
  return {"grad " + h.name(), [chart, h](const Point& p) { return chart.gradient(h, p); }};
}

namespace fields {

ScalarField u1_plus_u2_squared() {
  return {"u1_plus_u2sq", [](const Vec& u) { return u(0) + u(1) * u(1); },
          [](const Vec& u) {
            Vec d(2);
            d << 1.0, 2.0 * u(1);
            return d;
          }};
}

ScalarField log_u1_plus_log_u2_cubed() {
  return {"log_u1_plus_log_u2_cubed",
          [](const Vec& u) {
            const double l2 = std::log(u(1));
            return std::log(u(0)) + l2 * l2 * l2;
          },
          [](const Vec& u) {
            const double l2 = std::log(u(1));
            Vec d(2);
            d << 1.0 / u(0), 3.0 * l2 * l2 / u(1);
            return d;
          }};
}

ScalarField u1_cubed_plus_log_u2() {
  return {"u1cubed_plus_log_u2", [](const Vec& u) { return u(0) * u(0) * u(0) + std::log(u(1)); },
          [](const Vec& u) {
            Vec d(2);
            d << 3.0 * u(0) * u(0), 1.0 / u(1);
            return d;
          }};
}

ScalarField log_squared_norm() {
  return {"log_sqnorm", [](const Vec& u) { return u.array().log().square().sum(); },
          [](const Vec& u) { return Vec(2.0 * u.array().log() / u.array()); }};
}

ScalarField squared_norm() {
  return {"sqnorm", [](const Vec& u) { return u.squaredNorm(); },
          [](const Vec& u) { return Vec(2.0 * u); }};
}

ScalarField squared_distance_to(Vec center) {
  std::string name = "sqdist(";
  for (Eigen::Index i = 0; i < center.size(); ++i) {
    if (i) name += ',';
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, center(i));
    name.append(buf, end);
  }
  name += ')';
  return {name, [center](const Vec& u) { return (u - center).squaredNorm(); },
          [center](const Vec& u) { return Vec(2.0 * (u - center)); }};
}

ScalarField coordinate(int index) {
  return {"coord(" + std::to_string(index) + ")", [index](const Vec& u) { return u(index); },
          [index](const Vec& u) {
            Vec d = Vec::Zero(u.size());
            d(index) = 1.0;
            return d;
          }};
}

ScalarField constant(double value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return {"const(" + std::string(buf, end) + ")", [value](const Vec&) { return value; },
          [](const Vec& u) { return Vec(Vec::Zero(u.size())); }};
}

namespace {

std::vector<double> parse_args(std::string_view spec, std::string_view head) {
  // spec looks like head(a,b,...)
  if (spec.size() < head.size() + 2 || spec.back() != ')') {
    throw Error(ErrorCode::SchemaError, "malformed field spec '" + std::string(spec) + "'");
  }
  std::string_view body = spec.substr(head.size() + 1, spec.size() - head.size() - 2);
  std::vector<double> out;
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string token(body.substr(0, comma));
    try {
      size_t used = 0;
      out.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw Error(ErrorCode::SchemaError, "bad number '" + token + "' in '" + std::string(spec) + "'");
    }
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

bool starts_with_call(std::string_view spec, std::string_view head) {
  return spec.substr(0, head.size()) == head && spec.size() > head.size() && spec[head.size()] == '(';
}

}  // namespace

ScalarField parse(std::string_view spec) {
  if (spec == "u1_plus_u2sq") return u1_plus_u2_squared();
  if (spec == "log_u1_plus_log_u2_cubed") return log_u1_plus_log_u2_cubed();
  if (spec == "u1cubed_plus_log_u2") return u1_cubed_plus_log_u2();
  if (spec == "log_sqnorm") return log_squared_norm();
  if (spec == "sqnorm") return squared_norm();
  if (starts_with_call(spec, "sqdist")) {
    const auto args = parse_args(spec, "sqdist");
    if (args.empty()) throw Error(ErrorCode::SchemaError, "sqdist needs a center");
    return squared_distance_to(Eigen::Map<const Vec>(args.data(), static_cast<Eigen::Index>(args.size())));
  }
  if (starts_with_call(spec, "coord")) {
    const auto args = parse_args(spec, "coord");
    if (args.size() != 1 || args[0] < 0) throw Error(ErrorCode::SchemaError, "coord needs one index");
    return coordinate(static_cast<int>(args[0]));
  }
  if (starts_with_call(spec, "const")) {
    const auto args = parse_args(spec, "const");
    if (args.size() != 1) throw Error(ErrorCode::SchemaError, "const needs one value");
    return constant(args[0]);
  }
  throw Error(ErrorCode::SchemaError, "unknown scalar field '" + std::string(spec) + "'");
}

BivariateField parse_bivariate(std::string_view spec) {
  if (spec == "sum_sqnorm") {
    return {"sum_sqnorm", [](const Vec& u, const Vec& v) { return u.squaredNorm() + v.squaredNorm(); }};
  }
  if (spec == "sqdist_uv") {
    return {"sqdist_uv", [](const Vec& u, const Vec& v) { return (u - v).squaredNorm(); }};
  }
  if (spec == "v_sqnorm") {
    return {"v_sqnorm", [](const Vec&, const Vec& v) { return v.squaredNorm(); }};
  }
  throw Error(ErrorCode::SchemaError, "unknown bivariate field '" + std::string(spec) + "'");
}

VectorField parse_vector_field(std::string_view spec, const Chart& chart, const ScalarField& h) {
  if (spec == "grad") return gradient_field(chart, h);
  if (spec == "identity") {
    return {"identity", [](const Point& p) { return Tangent{p, p.coords}; }};
  }
  if (spec == "neg_identity") {
    return {"neg_identity", [](const Point& p) { return Tangent{p, -p.coords}; }};
  }
  throw Error(ErrorCode::SchemaError, "unknown vector field '" + std::string(spec) + "'");
}

}  // namespace fields

}  // namespace rinvex
