#include "rinvex/errors.hpp"
#include "rinvex/problem.hpp"
#include "rinvex/report.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <string>

using namespace rinvex;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Io;
}

// Report text with the run-dependent fields blanked.
std::string stable_dump(ReportDocument doc) {
  doc.timestamp.clear();
  for (auto& c : doc.checks) c.wall_time_ms = 0.0;
  return doc.dump();
}

}  // namespace

TEST_CASE("every built-in validates and meets its declared expectations") {
  for (const auto& name : builtin_problem_names()) {
    CAPTURE(name);
    const ProblemInstance p = load_builtin(name);
    CHECK_NOTHROW(p.validate());
    const ReportDocument doc = run_suite(p);
    for (const auto& r : doc.checks) {
      CAPTURE(r.label);
      CHECK(r.error.empty());
      CHECK(r.as_expected);
      CHECK(r.status != Status::TheoremInconsistent);
      CHECK_FALSE(r.definition.empty());
    }
    CHECK(doc.exit_code == kExitOk);
  }
}

TEST_CASE("unknown built-in") {
  CHECK(code_of([] { (void)load_builtin("example_9_9"); }) == ErrorCode::UnknownProblem);
  CHECK(code_of([] { (void)load_problem("example_9_9"); }) == ErrorCode::UnknownProblem);
}

TEST_CASE("suite override drops declared expectations") {
  ProblemInstance p = load_builtin("example_3_3");
  set_suite(p, "invex");
  const ReportDocument doc = run_suite(p);
  REQUIRE(doc.checks.size() == 1);
  CHECK(doc.checks[0].status == Status::Violated);
  CHECK_FALSE(doc.checks[0].expected);
  CHECK(doc.exit_code == kExitUnexpected);
}

TEST_CASE("suite override reuses declared item options") {
  ProblemInstance p = load_builtin("example_3_2");
  set_suite(p, "invex,preinvex:ConnectingFromU");
  REQUIRE(p.suite.size() == 2);
  CHECK(p.suite[1].samples == SampleSource::Explicit);
  const ReportDocument doc = run_suite(p);
  CHECK(doc.checks[0].status == Status::Holds);
  const CheckRecord& pre = doc.checks[1];
  CHECK(pre.status == Status::Violated);
  REQUIRE(pre.witness.u);
  CHECK((*pre.witness.u)[0] == 0.25);
  CHECK((*pre.witness.v)[0] == doctest::Approx(1.0 / 9.0));
  CHECK(*pre.witness.s == 0.1);
  CHECK(pre.worst_margin == doctest::Approx(-0.1413086).epsilon(1e-6));
}

TEST_CASE("bad suite entries") {
  ProblemInstance p = load_builtin("example_3_2");
  CHECK(code_of([&] { set_suite(p, "invex,bogus"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { set_suite(p, "preinvex:Sideways"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { set_suite(p, ""); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("overrides validate their input") {
  ProblemInstance p = load_builtin("example_3_2");
  CHECK(code_of([&] { set_box(p, "-1,1"); }) == ErrorCode::DomainViolation);
  CHECK(code_of([&] { set_box(p, "1,2,3"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { set_order(p, 0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { set_delta(p, -0.5); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { set_geodesic_mode(p, "up"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { set_dominance_mode(p, "weak"); }) == ErrorCode::InvalidArgument);
  set_box(p, "0.5,2,1,3");
  CHECK(p.scheme.box[1].lo == 1.0);
  set_delta(p, 0.25);
  CHECK(p.options().probe_delta == 0.25);
}

TEST_CASE("json config with a base problem") {
  const ProblemInstance p = load_config(R"js({
    "base": "example_3_4",
    "name": "ex34_small",
    "scheme": {"grid": 5, "random_pairs": 20, "seed": 9},
    "suite": [{"check": "quasi1", "expect": "Holds"}, "invex"]
  })js");
  CHECK(p.name == "ex34_small");
  CHECK(p.chart.name() == "positive_orthant2");
  CHECK(p.scheme.grid_points_per_axis == 5);
  CHECK(p.scheme.box[0].hi == 2.0);
  REQUIRE(p.suite.size() == 2);
  CHECK(p.suite[0].expect == Status::Holds);
  CHECK_FALSE(p.suite[1].expect);
}

TEST_CASE("json config from scratch") {
  const ProblemInstance p = load_config(R"js({
    "chart": "euclidean:3",
    "objectives": ["sqnorm", "sqdist(1,0,0)"],
    "eta": "diff",
    "m": 2,
    "u_star": [0.5, 0, 0],
    "scheme": {"box": [-1, 1], "grid": 3, "random_pairs": 10,
               "explicit_pairs": [[[0.1, 0.2, 0.3], [0, 0, 0]]]},
    "suite": ["invex", {"check": "strict_minimizer", "expect": "Holds"}]
  })js");
  CHECK(p.chart.dim() == 3);
  CHECK(p.scheme.box.size() == 3);
  CHECK(p.scheme.explicit_pairs.size() == 1);
  const ReportDocument doc = run_suite(p);
  CHECK(doc.checks[0].status == Status::Holds);
  CHECK(doc.checks[1].status == Status::Holds);
  CHECK(doc.exit_code == kExitOk);
}

TEST_CASE("key-value config") {
  const ProblemInstance p = load_config(R"(# two quadratics
name = kv_demo
chart = euclidean:2
objectives = sqnorm; sqdist(1,0)
eta = diff
m = 2
box = -1,1
grid = 5
random_pairs = 50
seed = 4
pair = 0.1,0.2 | 0.3,0.4
u_star = 0.5,0
suite = invex, preinvex, strict_minimizer
check.preinvex.geodesic_mode = ConnectingFromV
check.strict_minimizer.expect = Holds
)");
  CHECK(p.name == "kv_demo");
  CHECK(p.objectives.size() == 2);
  CHECK(p.scheme.seed == 4);
  CHECK(p.scheme.explicit_pairs.size() == 1);
  REQUIRE(p.suite.size() == 3);
  CHECK(p.suite[1].geodesic_mode == GeodesicMode::ConnectingFromV);
  CHECK(p.suite[2].expect == Status::Holds);
}

TEST_CASE("config errors carry a location") {
  auto message = [](const std::string& text) {
    try {
      (void)load_config(text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SchemaError);
      return std::string(e.what());
    }
    FAIL("expected SchemaError");
    return std::string();
  };
  CHECK(message("name = a\nbogus = 1\n").find("line 2") != std::string::npos);
  CHECK(message("name = a\nm = two\n").find("line 2") != std::string::npos);
  CHECK(message(R"js({"objectives": ["sqnorm"], "colour": 1})js").find("colour") != std::string::npos);
  CHECK(message(R"js({"objectives": ["sqnorm"], "scheme": {"grid": "x"}})js").find("scheme.grid") != std::string::npos);
  CHECK(message(R"js({"objectives": ["nope"]})js").find("nope") != std::string::npos);
  CHECK(message(R"js({"objectives": ["sqnorm"], "suite": ["strict_minimizer"]})js").find("u_star") != std::string::npos);
  CHECK(message("{ not json").find("JSON") != std::string::npos);
}

TEST_CASE("report round-trips through JSON") {
  ProblemInstance p = load_builtin("example_3_2");
  set_grid(p, 5);
  const ReportDocument doc = run_suite(p);
  const std::string text = doc.dump();
  const ReportDocument back = parse_report(text);
  CHECK(back.dump() == text);
  CHECK(back.checks.size() == doc.checks.size());
  CHECK(std::isinf(back.checks[7].delta_hat));  // vacuous pseudo monotonicity
  CHECK(back.overall_status == doc.overall_status);
}

TEST_CASE("round trip property over built-ins and overrides") {
  for (const auto& name : builtin_problem_names()) {
    for (int grid : {3, 4}) {
      ProblemInstance p = load_builtin(name);
      set_grid(p, grid);
      set_seed(p, 100 + grid);
      const ReportDocument doc = run_suite(p);
      CHECK(parse_report(doc.dump()).dump() == doc.dump());
    }
  }
}

TEST_CASE("reports are deterministic apart from timing fields") {
  const ProblemInstance p = load_builtin("euclidean_baseline");
  CHECK(stable_dump(run_suite(p)) == stable_dump(run_suite(p)));
}

TEST_CASE("overall status is the worst severity") {
  std::vector<CheckRecord> recs(3);
  recs[0].status = Status::Holds;
  recs[1].status = Status::Violated;
  recs[2].status = Status::NotStrong;
  CHECK(overall_status(recs) == Status::Violated);
  recs[0].status = Status::TheoremInconsistent;
  CHECK(overall_status(recs) == Status::TheoremInconsistent);
  CHECK(overall_status({}) == Status::HoldsVacuously);
}

TEST_CASE("check errors are recorded, not thrown") {
  // grad_resolved needs a nonzero gradient; the grid contains the origin.
  ProblemInstance p = load_builtin("euclidean_baseline");
  p.eta = "grad_resolved";
  set_grid(p, 3);
  set_suite(p, "invex,preinvex");
  const ReportDocument doc = run_suite(p);
  REQUIRE(doc.checks.size() == 2);
  CHECK(doc.checks[0].status == Status::Error);
  CHECK(doc.checks[0].error.find("gradient") != std::string::npos);
  CHECK(doc.overall_status == Status::Error);
  CHECK(doc.exit_code == kExitUnexpected);
}

TEST_CASE("witness csv") {
  ProblemInstance p = load_builtin("example_3_2");
  set_suite(p, "preinvex:ConnectingFromU");
  const std::string csv = witnesses_csv(run_suite(p));
  CHECK(csv.rfind("check,status,worst_margin,u,v,s,t\n", 0) == 0);
  CHECK(csv.find("\"preinvex[ConnectingFromU,explicit]\",Violated,") != std::string::npos);
  CHECK(csv.find("0.25;0.25") != std::string::npos);
}

TEST_CASE("definitions exist for every check") {
  for (const auto& id : known_checks()) CHECK_FALSE(check_definition(id).empty());
  CHECK(check_definition("nope").empty());
}
