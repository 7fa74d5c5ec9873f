#include "oracles.hpp"

#include "rinvex/errors.hpp"
#include "rinvex/fields.hpp"
#include "rinvex/manifold.hpp"

#include <doctest.h>

#include <cmath>

using namespace rinvex;
using namespace rinvex::test;

TEST_CASE("orthant exp matches the closed form and stays in the domain") {
  const Chart c = Chart::positive_orthant2();
  const Point p = c.point({2.0, 0.5});
  const Tangent x = c.tangent(p, {1.0, -1.0});
  const Point q = c.exp(p, x);
  CHECK(q[0] == doctest::Approx(2.0 * std::exp(0.5)).epsilon(1e-14));
  CHECK(q[1] == doctest::Approx(0.5 * std::exp(-2.0)).epsilon(1e-14));
  CHECK(c.contains(q.coords));
}

TEST_CASE("log inverts exp on both charts") {
  SeededUniform rng(7);
  for (const Chart& c : {Chart::positive_orthant2(), Chart::euclidean(3)}) {
    for (int k = 0; k < 200; ++k) {
      const Point p = random_point(c, rng);
      const Point q = random_point(c, rng);
      const Point back = c.exp(p, c.log(p, q));
      CHECK((back.coords - q.coords).norm() <= 1e-12 * (1.0 + q.coords.norm()));
    }
  }
}

TEST_CASE("orthant distance is the Euclidean distance of the log coordinates") {
  const Chart c = Chart::positive_orthant2();
  const Point a = c.point({0.25, 4.0});
  const Point b = c.point({1.0, 1.0});
  const double expected = std::hypot(std::log(4.0), std::log(0.25));
  CHECK(c.distance(a, b) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(c.distance(b, a) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("distance equals the norm of the connecting velocity") {
  SeededUniform rng(11);
  const Chart c = Chart::positive_orthant2();
  for (int k = 0; k < 500; ++k) {
    const Point a = random_point(c, rng);
    const Point b = random_point(c, rng);
    const Geodesic g = Geodesic::connecting(c, a, b);
    CHECK(std::abs(c.norm(g.initial_velocity()) - c.distance(a, b)) <= 1e-9);
    CHECK(std::abs(c.distance(a, b) - c.distance(b, a)) <= 1e-12);
  }
}

TEST_CASE("connecting geodesic hits both endpoints") {
  const Chart c = Chart::positive_orthant2();
  const Point a = c.point({0.25, 0.25});
  const Point b = c.point({1.0 / 9.0, 1.0 / 9.0});
  const Geodesic g = Geodesic::connecting(c, a, b);
  CHECK(same_point(g.position(0.0), a));
  CHECK(same_point(g.position(1.0), b));
  // r(s) = a (b/a)^s
  const double s = 0.3;
  CHECK(g.position(s)[0] == doctest::Approx(0.25 * std::pow((1.0 / 9.0) / 0.25, s)).epsilon(1e-14));
}

TEST_CASE("transport agrees with an RK4 integration of the parallel transport equation") {
  SeededUniform rng(3);
  const Chart c = Chart::positive_orthant2();
  for (int k = 0; k < 50; ++k) {
    const Point a = random_point(c, rng);
    const Point b = random_point(c, rng);
    const Tangent x = random_tangent(c, a, rng);
    const Vec oracle = rk4_orthant_transport(a.coords, b.coords, x.components, 400);
    const Tangent moved = c.transport(x, b);
    CHECK((moved.components - oracle).norm() <= 1e-9 * (1.0 + oracle.norm()));
  }
}

TEST_CASE("tangent arithmetic rejects mismatched base points") {
  const Chart c = Chart::positive_orthant2();
  const Tangent x = c.tangent(c.point({1.0, 1.0}), {1.0, 0.0});
  const Tangent y = c.tangent(c.point({2.0, 1.0}), {1.0, 0.0});
  CHECK_THROWS_AS((void)(x + y), Error);
  try {
    (void)(x - y);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BasePointMismatch);
  }
}

TEST_CASE("domain guard") {
  const Chart c = Chart::positive_orthant2();
  CHECK_THROWS_AS((void)c.point({0.0, 1.0}), Error);
  CHECK_THROWS_AS((void)c.point({1.0, -2.0}), Error);
  CHECK_THROWS_AS((void)c.point({1.0, 2.0, 3.0}), Error);
  CHECK(c.contains(Vec::Constant(2, 1e-12)));
  CHECK_FALSE(c.contains(Vec::Constant(2, 1e-13)));
  CHECK_NOTHROW((void)Chart::euclidean(2).point({-5.0, 0.0}));
}

TEST_CASE("gradient raises the differential through the orthant metric") {
  const Chart c = Chart::positive_orthant2();
  const ScalarField h = fields::u1_plus_u2_squared();
  const Point p = c.point({2.0, 3.0});
  const Tangent g = c.gradient(h, p);
  // u_i^2 dh/du_i
  CHECK(g.components[0] == doctest::Approx(4.0));
  CHECK(g.components[1] == doctest::Approx(9.0 * 6.0));
}

TEST_CASE("finite-difference differential matches the analytic one") {
  const Chart c = Chart::positive_orthant2();
  for (const auto& h : {fields::u1_plus_u2_squared(), fields::log_u1_plus_log_u2_cubed(),
                        fields::u1_cubed_plus_log_u2(), fields::log_squared_norm()}) {
    const Point p = c.point({1.7, 0.8});
    const Vec exact = c.differential(h, p);
    const Vec fd = c.differential(h.without_differential(), p);
    CHECK((exact - fd).norm() <= 1e-6 * (1.0 + exact.norm()));
  }
}

TEST_CASE("sampling is deterministic and covers the box") {
  SampleScheme s;
  s.grid_points_per_axis = 3;
  s.random_pairs = 10;
  const Chart c = Chart::positive_orthant2();
  const auto grid = grid_points(c, s);
  REQUIRE(grid.size() == 9);
  CHECK(grid.front()[0] == 0.5);
  CHECK(grid.back()[1] == 5.0);
  const auto a = sample_pairs(c, s);
  const auto b = sample_pairs(c, s);
  REQUIRE(a.size() == 81 + 10);
  for (size_t i = 0; i < a.size(); ++i) CHECK(same_point(a[i].u, b[i].u));
  s.seed += 1;
  const auto other = sample_pairs(c, s);
  CHECK_FALSE(same_point(other.back().u, a.back().u));
}

TEST_CASE("scheme validation") {
  SampleScheme s;
  s.box = {{-1.0, 1.0}, {0.5, 1.0}};
  CHECK_THROWS_AS(s.validate(Chart::positive_orthant2()), Error);
  CHECK_NOTHROW(s.validate(Chart::euclidean(2)));
  s.box = {{0.5, 1.0}};
  CHECK_THROWS_AS(s.validate(Chart::euclidean(2)), Error);
}

TEST_CASE("worked geometry values") {
  const Chart c = Chart::positive_orthant2();
  const Chart e = Chart::euclidean(2);

  const Point half = c.point({0.5, 0.5});
  CHECK(c.inner(half, c.tangent(half, {1.0, 0.0}), c.tangent(half, {1.0, 0.0})) == doctest::Approx(4.0));
  const Point pe = e.point({7.0, -1.0});
  CHECK(e.inner(pe, e.tangent(pe, {1.0, 2.0}), e.tangent(pe, {3.0, -1.0})) == doctest::Approx(1.0));

  const Point p12 = c.point({1.0, 2.0});
  const Point q = c.exp(p12, c.tangent(p12, {2.0, 0.0}));
  CHECK(q[0] == doctest::Approx(7.3890561).epsilon(1e-8));
  CHECK(q[1] == doctest::Approx(2.0));
  CHECK(same_point(c.exp(p12, c.zero(p12)), p12));

  const Point one = c.point({1.0, 1.0});
  const Geodesic g(c, c.tangent(one, {1.0, 0.0}));
  CHECK(g.position(1.0)[0] == doctest::Approx(std::exp(1.0)));
  CHECK(g.position(1.0)[1] == doctest::Approx(1.0));
  CHECK(same_point(g.eval(0.0).position, one));

  const Point u = e.point({2.0, 4.0});
  const Point v = e.point({0.0, 0.0});
  const Geodesic line(e, e.tangent(v, u.coords - v.coords));
  CHECK(line.position(0.5)[0] == doctest::Approx(1.0));
  CHECK(line.position(0.5)[1] == doctest::Approx(2.0));

  const Geodesic r = Geodesic::connecting(c, c.point({0.25, 0.25}), c.point({1.0 / 9.0, 1.0 / 9.0}));
  CHECK(r.position(0.1)[0] == doctest::Approx(0.2305270).epsilon(1e-7));

  const Tangent moved = c.transport(c.tangent(one, {1.0, 0.0}), c.point({2.0, 3.0}));
  CHECK(moved.components[0] == doctest::Approx(2.0));
  CHECK(moved.components[1] == doctest::Approx(0.0));
  CHECK(c.norm(moved) == doctest::Approx(1.0));

  CHECK(c.distance(one, c.point({std::exp(1.0), 1.0})) == doctest::Approx(1.0));
  CHECK(e.distance(v, e.point({3.0, 4.0})) == doctest::Approx(5.0));
  CHECK(c.distance(one, one) == 0.0);

  const Tangent grad = c.gradient(fields::u1_plus_u2_squared(), p12);
  CHECK(grad.components[0] == doctest::Approx(1.0));
  CHECK(grad.components[1] == doctest::Approx(16.0));
  CHECK(c.gradient(fields::constant(3.0), p12).components.norm() == 0.0);
  const Tangent eg = e.gradient(fields::squared_norm(), pe);
  CHECK(eg.components[0] == doctest::Approx(14.0));
  CHECK(eg.components[1] == doctest::Approx(-2.0));
}
