#include "rinvex/sampling.hpp"

#include "rinvex/errors.hpp"

#include <cmath>

namespace rinvex {

void SampleScheme::validate(const Chart& chart) const {
  if (static_cast<int>(box.size()) != chart.dim()) {
    throw Error(ErrorCode::InvalidArgument, "box has " + std::to_string(box.size()) +
                                                " axes but chart " + chart.name() + " has dim " +
                                                std::to_string(chart.dim()));
  }
  Vec lo(chart.dim());
  Vec hi(chart.dim());
  for (int i = 0; i < chart.dim(); ++i) {
    if (!(box[i].lo <= box[i].hi) || !std::isfinite(box[i].lo) || !std::isfinite(box[i].hi)) {
      throw Error(ErrorCode::InvalidArgument, "box axis " + std::to_string(i) + " is not an interval");
    }
    lo(i) = box[i].lo;
    hi(i) = box[i].hi;
  }
  if (!chart.contains(lo) || !chart.contains(hi)) {
    throw Error(ErrorCode::DomainViolation, "sample box leaves the domain of " + chart.name());
  }
  if (grid_points_per_axis < 0 || random_pairs < 0) {
    throw Error(ErrorCode::InvalidArgument, "sample counts must be non-negative");
  }
  for (double s : s_grid) {
    if (!(s > 0.0 && s < 1.0)) throw Error(ErrorCode::InvalidArgument, "s_grid values must lie in (0,1)");
  }
  for (const auto& [u, v] : explicit_pairs) {
    if (!chart.contains(u) || !chart.contains(v)) {
      throw Error(ErrorCode::DomainViolation, "explicit sample pair leaves the domain of " + chart.name());
    }
  }
}

std::vector<Point> grid_points(const Chart& chart, const SampleScheme& scheme) {
  const int n = scheme.grid_points_per_axis;
  const int dim = chart.dim();
  std::vector<Point> out;
  if (n <= 0) return out;
  auto axis_value = [&](int axis, int k) {
    const Interval& iv = scheme.box[axis];
    if (n == 1) return 0.5 * (iv.lo + iv.hi);
    return iv.lo + (iv.hi - iv.lo) * static_cast<double>(k) / static_cast<double>(n - 1);
  };
  std::vector<int> index(dim, 0);
  while (true) {
    Vec c(dim);
    for (int a = 0; a < dim; ++a) c(a) = axis_value(a, index[a]);
    out.push_back(chart.point(std::move(c)));
    int a = dim - 1;
    while (a >= 0 && ++index[a] == n) {
      index[a] = 0;
      --a;
    }
    if (a < 0) break;
  }
  return out;
}

namespace {

std::vector<PointPair> random_pairs(const Chart& chart, const SampleScheme& scheme) {
  SeededUniform uniform(scheme.seed);
  std::vector<PointPair> out;
  out.reserve(static_cast<size_t>(scheme.random_pairs));
  auto draw = [&] {
    Vec c(chart.dim());
    for (int a = 0; a < chart.dim(); ++a) c(a) = uniform(scheme.box[a].lo, scheme.box[a].hi);
    return chart.point(std::move(c));
  };
  for (int i = 0; i < scheme.random_pairs; ++i) {
    Point u = draw();
    Point v = draw();
    out.push_back({std::move(u), std::move(v)});
  }
  return out;
}

}  // namespace

std::vector<Point> candidate_points(const Chart& chart, const SampleScheme& scheme) {
  std::vector<Point> out;
  if (scheme.source == SampleSource::Box) {
    out = grid_points(chart, scheme);
    for (auto& pair : random_pairs(chart, scheme)) {
      out.push_back(std::move(pair.u));
      out.push_back(std::move(pair.v));
    }
  }
  for (const auto& [u, v] : scheme.explicit_pairs) {
    out.push_back(chart.point(u));
    out.push_back(chart.point(v));
  }
  return out;
}

std::vector<PointPair> sample_pairs(const Chart& chart, const SampleScheme& scheme) {
  scheme.validate(chart);
  std::vector<PointPair> out;
  if (scheme.source == SampleSource::Box) {
    const auto grid = grid_points(chart, scheme);
    out.reserve(grid.size() * grid.size() + static_cast<size_t>(scheme.random_pairs));
    for (const auto& u : grid) {
      for (const auto& v : grid) out.push_back({u, v});
    }
    for (auto& pair : random_pairs(chart, scheme)) out.push_back(std::move(pair));
  }
  for (const auto& [u, v] : scheme.explicit_pairs) out.push_back({chart.point(u), chart.point(v)});
  return out;
}

}  // namespace rinvex
