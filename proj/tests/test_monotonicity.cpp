#include "oracles.hpp"

#include "rinvex/monotonicity.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace rinvex;
using namespace rinvex::test;

namespace {

SampleScheme box(double lo, double hi, int grid = 9, int random = 1000) {
  SampleScheme s;
  s.box = {{lo, hi}, {lo, hi}};
  s.grid_points_per_axis = grid;
  s.random_pairs = random;
  return s;
}

}  // namespace

TEST_CASE("Nemeth monotonicity of linear fields") {
  const Chart e = Chart::euclidean(2);
  const ScalarField unused = fields::squared_norm();
  const SampleScheme s = box(-1.0, 1.0, 5, 100);
  const Verdict up = check_monotone_vector_field(e, fields::parse_vector_field("identity", e, unused), s);
  CHECK(up.status == Status::Holds);
  CHECK(std::isnan(up.delta_hat));
  const Verdict down = check_monotone_vector_field(e, fields::parse_vector_field("neg_identity", e, unused), s);
  CHECK(down.status == Status::Violated);
  REQUIRE(down.witness.u);
  CHECK_FALSE(same_point(*down.witness.u, *down.witness.v));
}

TEST_CASE("gradient of the log-coordinate quadratic is monotone on the orthant") {
  const Chart c = Chart::positive_orthant2();
  const Verdict v = check_monotone_vector_field(c, gradient_field(c, fields::log_squared_norm()), box(0.5, 5.0));
  CHECK(v.status == Status::Holds);
  // In w = ln u the pairing is 2 |w_u - w_v|^2.
  CHECK(v.worst_margin >= -1e-12);
}

TEST_CASE("transport inside the pairing preserves the field norm") {
  const Chart c = Chart::positive_orthant2();
  const VectorField x = gradient_field(c, fields::u1_plus_u2_squared());
  SampleScheme s = box(0.5, 5.0, 5, 200);
  for (const auto& pair : sample_pairs(c, s)) {
    const Tangent at_u = x(pair.u);
    CHECK(std::abs(c.norm(c.transport(at_u, pair.v)) - c.norm(at_u)) <= 1e-9 * std::max(1.0, c.norm(at_u)));
  }
}

TEST_CASE("example_4_1_m2 is strongly invariant monotone with delta 1") {
  const Chart c = Chart::positive_orthant2();
  const ScalarField h = fields::u1_plus_u2_squared();
  const Verdict v = check_invariant_eta_monotone(c, gradient_field(c, h), EtaMap::gradient_resolved(h, 2), 2,
                                                 MonotoneKind::Strong, box(0.5, 5.0));
  CHECK(v.status == Status::Holds);
  CHECK(std::abs(v.delta_hat - 1.0) <= 1e-9);
}

TEST_CASE("linear fields with the displacement map") {
  // X(u) = c u: pairings sum to -c |u - v|^2 against norms 2 |u - v|^2.
  const Chart e = Chart::euclidean(2);
  const VectorField id = fields::parse_vector_field("identity", e, fields::squared_norm());
  const Verdict half =
      check_invariant_eta_monotone(e, id, EtaMap::euclidean_diff(), 2, MonotoneKind::Strong, box(-1.0, 1.0));
  CHECK(half.status == Status::Holds);
  CHECK(half.delta_hat == doctest::Approx(0.5).epsilon(1e-9));
  const Verdict one = check_invariant_eta_monotone(e, gradient_field(e, fields::squared_norm()),
                                                   EtaMap::euclidean_diff(), 2, MonotoneKind::Strong, box(-1.0, 1.0));
  CHECK(one.status == Status::Holds);
  CHECK(one.delta_hat == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("example_3_2 pairings") {
  const Chart c = Chart::positive_orthant2();
  const ScalarField h = fields::u1_plus_u2_squared();
  const SampleScheme s = box(0.5, 5.0);
  const VectorField grad = gradient_field(c, h);

  const Verdict pseudo = check_invariant_eta_monotone(c, grad, EtaMap::ex32(), 2, MonotoneKind::Pseudo, s);
  CHECK(pseudo.status == Status::HoldsVacuously);
  CHECK(pseudo.antecedent_hits == 0);

  const Verdict strong = check_invariant_eta_monotone(c, grad, EtaMap::ex32(), 2, MonotoneKind::Strong, s);
  CHECK(strong.status == Status::Holds);
  // Sum of pairings = -(2 + u1 + v1 + 2 u2^2 + 2 v2^2); the slack is its negative.
  double worst = kInf;
  for (const auto& pair : sample_pairs(c, s)) {
    const Vec& u = pair.u.coords;
    const Vec& v = pair.v.coords;
    worst = std::min(worst, 2.0 + u(0) + v(0) + 2.0 * u(1) * u(1) + 2.0 * v(1) * v(1));
  }
  CHECK(strong.worst_margin == doctest::Approx(worst).epsilon(1e-12));
  CHECK(strong.worst_margin >= 2.0);
}

TEST_CASE("strong monotonicity is symmetric in the pair") {
  const Chart c = Chart::positive_orthant2();
  const ScalarField h = fields::u1_plus_u2_squared();
  SampleScheme s = box(0.5, 5.0, 4, 100);
  SampleScheme swapped = s;
  swapped.source = SampleSource::Explicit;
  swapped.explicit_pairs.clear();
  for (const auto& pair : sample_pairs(c, s)) swapped.explicit_pairs.emplace_back(pair.v.coords, pair.u.coords);
  const VectorField grad = gradient_field(c, h);
  const Verdict a = check_invariant_eta_monotone(c, grad, EtaMap::ex32(), 2, MonotoneKind::Strong, s);
  const Verdict b = check_invariant_eta_monotone(c, grad, EtaMap::ex32(), 2, MonotoneKind::Strong, swapped);
  CHECK(std::abs(a.delta_hat - b.delta_hat) < 1e-12);
}

TEST_CASE("invex and monotone cross-check") {
  const Chart e = Chart::euclidean(2);
  const auto flat = cross_check_invex_monotone(e, fields::squared_norm(), EtaMap::euclidean_diff(), 2, box(-1.0, 1.0));
  CHECK(flat.status == Status::Consistent);
  CHECK(flat.verdict("invex").status == Status::Holds);
  CHECK(flat.verdict("eta_monotone").status == Status::Holds);
  CHECK(flat.verdict("pseudo_monotone").status == Status::Holds);
  CHECK(flat.not_applicable.empty());

  const Chart c = Chart::positive_orthant2();
  const auto curved = cross_check_invex_monotone(c, fields::u1_plus_u2_squared(), EtaMap::ex32(), 2, box(0.5, 5.0));
  CHECK(curved.status == Status::Consistent);
  CHECK(curved.verdict("invex").status == Status::Holds);
  CHECK(curved.verdict("eta_monotone").status == Status::Holds);
  CHECK(curved.not_applicable.size() == 2);

  const auto constant = cross_check_invex_monotone(e, fields::constant(1.0), EtaMap::euclidean_diff(), 2, box(-1.0, 1.0, 5, 50));
  CHECK(constant.status == Status::Consistent);
  CHECK(constant.verdict("invex").status == Status::NotStrong);
  CHECK(constant.verdict("eta_monotone").status == Status::NotStrong);
  CHECK(constant.verdict("eta_monotone").delta_hat == 0.0);
}

TEST_CASE("invexity with d > 0 comes with strong monotonicity on the same samples") {
  const Chart c = Chart::positive_orthant2();
  const ScalarField h = fields::u1_plus_u2_squared();
  for (const EtaMap& eta : {EtaMap::ex32(), EtaMap::gradient_resolved(h, 2)}) {
    const auto r = cross_check_invex_monotone(c, h, eta, 2, box(0.5, 5.0));
    if (r.verdict("invex").status != Status::Holds) continue;
    CHECK(r.verdict("eta_monotone").status == Status::Holds);
    CHECK(r.verdict("eta_monotone").delta_hat > 0.0);
  }
}
