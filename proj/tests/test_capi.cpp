#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rinvex/rinvex.h"

#include <cmath>
#include <cstring>
#include <string>

TEST_CASE("built-in registry through the C interface") {
  REQUIRE(rinvex_builtin_count() == 6);
  CHECK(std::string(rinvex_builtin_name(0)) == "example_3_2");
  CHECK(rinvex_builtin_name(99) == nullptr);
  CHECK(std::string(rinvex_version()).size() > 0);
}

TEST_CASE("problem lifecycle and suite run") {
  rinvex_problem* p = nullptr;
  REQUIRE(rinvex_problem_from_builtin("example_3_3", &p) == RINVEX_OK);
  CHECK(rinvex_problem_set_grid(p, 5) == RINVEX_OK);
  CHECK(rinvex_problem_set_seed(p, 42) == RINVEX_OK);
  rinvex_report* r = nullptr;
  REQUIRE(rinvex_run_suite(p, &r) == RINVEX_OK);
  CHECK(rinvex_report_exit_code(r) == 0);
  REQUIRE(rinvex_report_check_count(r) == 5);
  CHECK(std::string(rinvex_report_check_status(r, 0)) == "Violated");
  CHECK(std::string(rinvex_report_check_status(r, 1)) == "HoldsVacuously");
  CHECK(rinvex_report_check_status(r, 5) == nullptr);

  char* json = nullptr;
  REQUIRE(rinvex_report_json(r, &json) == RINVEX_OK);
  CHECK(std::strstr(json, "\"schema\": \"rinvex.report/1\"") != nullptr);
  rinvex_string_free(json);

  char* csv = nullptr;
  REQUIRE(rinvex_report_witness_csv(r, &csv) == RINVEX_OK);
  CHECK(std::strncmp(csv, "check,status", 12) == 0);
  rinvex_string_free(csv);

  rinvex_report_free(r);
  rinvex_problem_free(p);
}

TEST_CASE("errors map to status codes with a message") {
  rinvex_problem* p = nullptr;
  CHECK(rinvex_problem_from_builtin("nope", &p) == RINVEX_ERR_UNKNOWN_PROBLEM);
  CHECK(p == nullptr);
  CHECK(std::string(rinvex_last_error()).find("nope") != std::string::npos);
  CHECK(rinvex_problem_from_config("name = x\nwhat = 1\n", &p) == RINVEX_ERR_SCHEMA);
  CHECK(rinvex_problem_from_builtin(nullptr, &p) == RINVEX_ERR_NULL);

  REQUIRE(rinvex_problem_from_builtin("example_3_2", &p) == RINVEX_OK);
  CHECK(rinvex_problem_set_box(p, "-1,1") == RINVEX_ERR_DOMAIN);
  CHECK(rinvex_problem_set_order(p, 0) == RINVEX_ERR_INVALID_ARGUMENT);
  CHECK(rinvex_problem_set_suite(p, "invex,zzz") == RINVEX_ERR_INVALID_ARGUMENT);
  CHECK(rinvex_problem_set_geodesic_mode(p, "ConnectingFromU") == RINVEX_OK);
  CHECK(rinvex_problem_set_dominance_mode(p, "pareto") == RINVEX_OK);
  CHECK(std::string(rinvex_last_error()).empty());
  char* text = nullptr;
  REQUIRE(rinvex_problem_json(p, &text) == RINVEX_OK);
  CHECK(std::strstr(text, "\"dominance\": \"pareto\"") != nullptr);
  rinvex_string_free(text);
  rinvex_problem_free(p);
  rinvex_problem_free(nullptr);
  rinvex_report_free(nullptr);
}

TEST_CASE("geometry primitives") {
  rinvex_chart* c = nullptr;
  REQUIRE(rinvex_chart_create("positive_orthant2", &c) == RINVEX_OK);
  CHECK(rinvex_chart_dim(c) == 2);
  const double p[2] = {1.0, 2.0};
  const double x[2] = {2.0, 0.0};
  double out[2];
  REQUIRE(rinvex_exp_map(c, p, x, out) == RINVEX_OK);
  CHECK(out[0] == doctest::Approx(std::exp(2.0)));
  CHECK(out[1] == doctest::Approx(2.0));

  const double a[2] = {1.0, 1.0};
  const double b[2] = {std::exp(1.0), 1.0};
  double d = 0.0;
  REQUIRE(rinvex_distance(c, a, b, &d) == RINVEX_OK);
  CHECK(d == doctest::Approx(1.0));

  double lg[2];
  REQUIRE(rinvex_log_map(c, a, b, lg) == RINVEX_OK);
  CHECK(lg[0] == doctest::Approx(1.0));

  const double to[2] = {2.0, 3.0};
  const double v[2] = {1.0, 0.0};
  double moved[2];
  REQUIRE(rinvex_parallel_transport(c, a, v, to, moved) == RINVEX_OK);
  CHECK(moved[0] == doctest::Approx(2.0));
  CHECK(moved[1] == doctest::Approx(0.0));

  const double bad[2] = {-1.0, 1.0};
  CHECK(rinvex_distance(c, a, bad, &d) == RINVEX_ERR_DOMAIN);
  rinvex_chart_free(c);

  CHECK(rinvex_chart_create("sphere", &c) == RINVEX_ERR_SCHEMA);
}
