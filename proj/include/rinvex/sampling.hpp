#pragma once

#include "rinvex/manifold.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace rinvex {

enum class SampleSource {
  Box,       // grid pairs, seeded random pairs, and the explicit pairs
  Explicit,  // explicit pairs only
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct PointPair {
  Point u;
  Point v;
};

struct SampleScheme {
  std::vector<Interval> box{{0.5, 5.0}, {0.5, 5.0}};
  int grid_points_per_axis = 9;
  int random_pairs = 1000;
  std::uint64_t seed = 20240601;
  std::vector<double> s_grid{0.1, 0.25, 0.5, 0.75, 0.9};
  std::vector<std::pair<Vec, Vec>> explicit_pairs;
  SampleSource source = SampleSource::Box;

  /// Throws InvalidArgument / DomainViolation when the scheme does not fit
  /// the chart.
  void validate(const Chart& chart) const;
};

/// Tensor grid over the box, first axis varying slowest.
std::vector<Point> grid_points(const Chart& chart, const SampleScheme& scheme);

/// Grid points plus the endpoints of the seeded random pairs and of the
/// explicit pairs. Used as the candidate set for point-wise predicates.
std::vector<Point> candidate_points(const Chart& chart, const SampleScheme& scheme);

/// All ordered grid pairs, then random pairs, then explicit pairs (or only
/// the explicit pairs for SampleSource::Explicit). Fully determined by the
/// scheme.
std::vector<PointPair> sample_pairs(const Chart& chart, const SampleScheme& scheme);

/// Uniform doubles in [0, 1) from std::mt19937_64, using the top 53 bits.
class SeededUniform {
 public:
  explicit SeededUniform(std::uint64_t seed) : engine_(seed) {}

  double operator()() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double operator()(double lo, double hi) { return lo + (hi - lo) * (*this)(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rinvex
