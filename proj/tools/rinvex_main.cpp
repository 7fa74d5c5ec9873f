// rinvex: run a check suite on a built-in or configured problem and write a
// JSON report. Exit codes: 0 expectations met, 1 unexpected verdict,
// 2 configuration error, 3 I/O error.

#include "rinvex/rinvex.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct Options {
  std::string problem;
  std::string config;
  std::string suite;
  std::optional<std::uint64_t> seed;
  std::optional<int> grid;
  std::string box;
  std::optional<int> m;
  std::optional<double> delta;
  std::optional<double> tol;
  std::string out;
  std::string witnesses;
  std::string geodesic_mode;
  std::string dominance_mode;
  bool list = false;
};

using ProblemPtr = std::unique_ptr<rinvex_problem, decltype(&rinvex_problem_free)>;
using ReportPtr = std::unique_ptr<rinvex_report, decltype(&rinvex_report_free)>;

struct CString {
  char* p = nullptr;
  ~CString() { rinvex_string_free(p); }
};

int fail(const std::string& what, int code) {
  std::cerr << "rinvex: " << what << "\n";
  return code;
}

int config_failure(rinvex_status status) {
  const int code = status == RINVEX_ERR_IO ? kExitIo : kExitConfig;
  return fail(rinvex_last_error(), code);
}

bool read_source(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return !std::cin.bad();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  text = buffer.str();
  return !in.bad();
}

bool write_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << text;
  out.close();
  return !out.fail();
}

int run(const Options& o) {
  if (o.list) {
    for (size_t i = 0; i < rinvex_builtin_count(); ++i) std::cout << rinvex_builtin_name(i) << "\n";
    return 0;
  }
  if (o.problem.empty() == o.config.empty()) return fail("give exactly one of --problem or --config", kExitConfig);

  rinvex_problem* raw = nullptr;
  rinvex_status status;
  if (!o.problem.empty()) {
    status = rinvex_problem_from_builtin(o.problem.c_str(), &raw);
  } else {
    std::string text;
    if (!read_source(o.config, text)) return fail("cannot read config '" + o.config + "'", kExitIo);
    status = rinvex_problem_from_config(text.c_str(), &raw);
  }
  if (status != RINVEX_OK) return config_failure(status);
  ProblemPtr problem(raw, rinvex_problem_free);

  auto apply = [&](rinvex_status s) { return s == RINVEX_OK ? 0 : config_failure(s); };
  int rc = 0;
  if (o.seed && (rc = apply(rinvex_problem_set_seed(problem.get(), *o.seed)))) return rc;
  if (o.grid && (rc = apply(rinvex_problem_set_grid(problem.get(), *o.grid)))) return rc;
  if (!o.box.empty() && (rc = apply(rinvex_problem_set_box(problem.get(), o.box.c_str())))) return rc;
  if (o.m && (rc = apply(rinvex_problem_set_order(problem.get(), *o.m)))) return rc;
  if (o.delta && (rc = apply(rinvex_problem_set_delta(problem.get(), *o.delta)))) return rc;
  if (o.tol && (rc = apply(rinvex_problem_set_tolerance(problem.get(), *o.tol)))) return rc;
  if (!o.geodesic_mode.empty() &&
      (rc = apply(rinvex_problem_set_geodesic_mode(problem.get(), o.geodesic_mode.c_str())))) {
    return rc;
  }
  if (!o.dominance_mode.empty() &&
      (rc = apply(rinvex_problem_set_dominance_mode(problem.get(), o.dominance_mode.c_str())))) {
    return rc;
  }
  if (!o.suite.empty() && (rc = apply(rinvex_problem_set_suite(problem.get(), o.suite.c_str())))) return rc;

  rinvex_report* raw_report = nullptr;
  if ((status = rinvex_run_suite(problem.get(), &raw_report)) != RINVEX_OK) return config_failure(status);
  ReportPtr report(raw_report, rinvex_report_free);

  CString json;
  if (rinvex_report_json(report.get(), &json.p) != RINVEX_OK) return fail(rinvex_last_error(), kExitIo);
  if (o.out.empty() || o.out == "-") {
    std::cout << json.p;
    std::cout.flush();
    if (!std::cout) return fail("cannot write report to stdout", kExitIo);
  } else if (!write_file(o.out, json.p)) {
    return fail("cannot write report to '" + o.out + "'", kExitIo);
  }

  if (!o.witnesses.empty()) {
    CString csv;
    if (rinvex_report_witness_csv(report.get(), &csv.p) != RINVEX_OK) return fail(rinvex_last_error(), kExitIo);
    if (!write_file(o.witnesses, csv.p)) return fail("cannot write witnesses to '" + o.witnesses + "'", kExitIo);
  }
  return rinvex_report_exit_code(report.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sampling checks for strong invexity, monotonicity and VVLIP equivalence on Riemannian charts"};
  Options o;
  app.add_option("--problem", o.problem, "Built-in problem name (see --list)");
  app.add_option("--config", o.config, "Config file (JSON or key = value), '-' for stdin");
  app.add_option("--suite", o.suite, "Comma separated check ids, optionally id:GeodesicMode");
  app.add_option("--seed", o.seed, "Random seed for the sampled pairs");
  app.add_option("--grid", o.grid, "Grid points per axis");
  app.add_option("--box", o.box, "lo,hi for every axis or lo1,hi1,lo2,hi2");
  app.add_option("--m", o.m, "Order m");
  app.add_option("--delta", o.delta, "Strength constant to probe");
  app.add_option("--tol", o.tol, "Violation tolerance");
  app.add_option("--out", o.out, "Report path (default stdout)");
  app.add_option("--witnesses", o.witnesses, "Also write witnesses as CSV to this path");
  app.add_option("--geodesic-mode", o.geodesic_mode, "EtaGeodesic | ConnectingFromV | ConnectingFromU");
  app.add_option("--dominance-mode", o.dominance_mode, "strict | pareto");
  app.add_flag("--list", o.list, "List built-in problems and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }
  return run(o);
}
