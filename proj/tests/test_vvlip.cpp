#include "oracles.hpp"

#include "rinvex/vvlip.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace rinvex;
using namespace rinvex::test;

namespace {

SampleScheme box(double lo, double hi, int grid) {
  SampleScheme s;
  s.box = {{lo, hi}, {lo, hi}};
  s.grid_points_per_axis = grid;
  s.random_pairs = 200;
  return s;
}

MopProblem euclid(std::vector<ScalarField> objectives) {
  return {Chart::euclidean(2), std::move(objectives), EtaMap::euclidean_diff(), {0.0, 2}};
}

}  // namespace

TEST_CASE("origin is a strict minimizer of the squared norm with delta 1") {
  const MopProblem p = euclid({fields::squared_norm()});
  const auto candidates = grid_points(p.chart, box(-1.0, 1.0, 11));
  const Verdict v = check_strict_minimizer(p, p.chart.point({0.0, 0.0}), candidates);
  CHECK(v.status == Status::Holds);
  CHECK(v.delta_hat == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("example_3_2 has no strict minimizer and no VVLIP solution") {
  const Chart c = Chart::positive_orthant2();
  const MopProblem p{c, {fields::u1_plus_u2_squared()}, EtaMap::ex32(), {0.0, 2}};
  const auto candidates = candidate_points(c, box(0.5, 5.0, 9));
  for (const Vec& star : {vec2(1.0, 1.0), vec2(0.5, 0.5), vec2(3.0, 2.0)}) {
    const Point u_star = c.point(star);
    CHECK(check_strict_minimizer(p, u_star, candidates).status != Status::Holds);
    const Verdict vv = check_vvlip_solution(p, u_star, candidates);
    CHECK(vv.status == Status::Violated);
    CHECK(vv.worst_margin == doctest::Approx(dh_ex32(star)).epsilon(1e-12));
  }
  // With candidates below u* the domination is strict.
  const Verdict strict = check_strict_minimizer(p, c.point({1.0, 1.0}), candidates);
  CHECK(strict.status == Status::Violated);
}

TEST_CASE("two quadratics share a strict minimizer at the midpoint") {
  const MopProblem p = euclid({fields::squared_norm(), fields::squared_distance_to(vec2(1.0, 0.0))});
  const auto candidates = candidate_points(p.chart, box(-1.0, 1.0, 9));
  const Point mid = p.chart.point({0.5, 0.0});
  const Verdict v = check_strict_minimizer(p, mid, candidates);
  CHECK(v.status == Status::Holds);
  CHECK(v.delta_hat > 0.0);
  CHECK(check_vvlip_solution(p, mid, candidates).status == Status::Holds);
}

TEST_CASE("vvlip for the squared norm and a linear objective") {
  const MopProblem quad = euclid({fields::squared_norm()});
  const auto candidates = grid_points(quad.chart, box(-1.0, 1.0, 5));
  CHECK(check_vvlip_solution(quad, quad.chart.point({0.0, 0.0}), candidates).status == Status::Holds);

  const MopProblem lin = euclid({fields::coordinate(0)});
  const Point star = lin.chart.point({0.5, 0.5});
  const Verdict v = check_vvlip_solution(lin, star, candidates);
  CHECK(v.status == Status::Violated);
  REQUIRE(v.witness.u);
  CHECK((*v.witness.u)[0] < 0.5);
}

TEST_CASE("single objective reduces to a scalar scan") {
  const Chart e = Chart::euclidean(2);
  const ScalarField h = fields::squared_distance_to(vec2(0.2, -0.4));
  const MopProblem p = euclid({h});
  const auto grid = grid_points(e, box(-1.0, 1.0, 7));
  for (double delta : {0.0, 0.5, 1.0, 1.5}) {
    for (const Point& star : grid) {
      // scalar oracle: some u with h(u) < h(u*) + delta |u - u*|^2
      bool dominated = false;
      for (const Point& u : grid) {
        const double cushion = delta * (u.coords - star.coords).squaredNorm();
        if (h(u) - h(star) - cushion < -1e-9) dominated = true;
      }
      CheckOptions o;
      o.probe_delta = delta;
      const Verdict v = check_strict_minimizer(p, star, grid, std::nullopt, DominanceMode::Strict, o);
      CHECK((*v.probe_violations > 0) == dominated);
    }
  }
}

TEST_CASE("membership is invariant under joint rescaling") {
  const MopProblem p = euclid({fields::squared_norm(), fields::squared_distance_to(vec2(1.0, 0.0))});
  const auto sq = fields::squared_norm();
  const auto sd = fields::squared_distance_to(vec2(1.0, 0.0));
  const MopProblem scaled = euclid({ScalarField("3sq", [sq](const Vec& x) { return 3.0 * sq(x); }),
                                    ScalarField("3sd", [sd](const Vec& x) { return 3.0 * sd(x); })});
  const auto grid = grid_points(p.chart, box(-1.0, 1.0, 9));
  for (const Point& star : grid) {
    CheckOptions o;
    o.probe_delta = 0.4;
    CheckOptions o3;
    o3.probe_delta = 1.2;
    const auto a = check_strict_minimizer(p, star, grid, std::nullopt, DominanceMode::Strict, o);
    const auto b = check_strict_minimizer(scaled, star, grid, std::nullopt, DominanceMode::Strict, o3);
    CHECK((*a.probe_violations == 0) == (*b.probe_violations == 0));
  }
}

TEST_CASE("global strict minimizers are local ones") {
  const MopProblem p = euclid({fields::squared_norm(), fields::squared_distance_to(vec2(1.0, 0.0))});
  const auto candidates = candidate_points(p.chart, box(-1.0, 1.0, 9));
  const Point mid = p.chart.point({0.5, 0.0});
  REQUIRE(check_strict_minimizer(p, mid, candidates).status == Status::Holds);
  for (double eps : {0.05, 0.3, 1.0, 10.0}) {
    const Verdict local = check_strict_minimizer(p, mid, candidates, eps);
    CHECK(is_clean(local.status));
    CHECK(local.status != Status::Violated);
  }
}

TEST_CASE("pareto dominance is at least as strict as componentwise dominance") {
  const MopProblem p = euclid({fields::coordinate(0), fields::coordinate(1)});
  // (0,1) versus u* = (0,0): first component equal, second larger. Not dominated either way.
  // (0,-1): first equal, second smaller. Pareto-dominates but not strictly.
  const Point star = p.chart.point({0.0, 0.0});
  const std::vector<Point> cand{p.chart.point({0.0, -1.0})};
  CHECK(check_strict_minimizer(p, star, cand, std::nullopt, DominanceMode::Strict).status != Status::Violated);
  CHECK(check_strict_minimizer(p, star, cand, std::nullopt, DominanceMode::Pareto).status == Status::Violated);
  CHECK(dominance_mode_from_string("pareto") == DominanceMode::Pareto);
}

TEST_CASE("equivalence scan on the quadratic and on example_3_2") {
  const MopProblem quad = euclid({fields::squared_norm()});
  SampleScheme grid21 = box(-1.0, 1.0, 21);
  const auto grid = grid_points(quad.chart, grid21);
  const ScanResult r = scan_equivalence(quad, grid, box(-1.0, 1.0, 9));
  CHECK(r.status == Status::Equivalent);
  REQUIRE(r.minimizer_set.size() == 1);
  CHECK(r.minimizer_set == r.vvlip_set);
  CHECK(grid[r.minimizer_set[0]].coords.norm() < 1e-12);
  CHECK(r.disagreements.empty());

  const Chart c = Chart::positive_orthant2();
  const MopProblem ex{c, {fields::u1_plus_u2_squared()}, EtaMap::ex32(), {0.0, 2}};
  const ScanResult e = scan_equivalence(ex, grid_points(c, box(0.5, 5.0, 21)), box(0.5, 5.0, 9));
  CHECK(e.status == Status::Equivalent);
  CHECK(e.minimizer_set.empty());
  CHECK(e.vvlip_set.empty());
  CHECK(e.disagreements.empty());
}

TEST_CASE("scan is not applicable without invex objectives") {
  const Chart c = Chart::positive_orthant2();
  const MopProblem ex{c, {fields::log_u1_plus_log_u2_cubed()}, EtaMap::ex33(), {0.0, 2}};
  const ScanResult r = scan_equivalence(ex, grid_points(c, box(0.5, 5.0, 5)), box(0.5, 5.0, 5));
  CHECK(r.status == Status::NotApplicable);
  CHECK(r.minimizer_set.empty());
}
