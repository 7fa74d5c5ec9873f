#include "rinvex/rinvex.h"

#include "rinvex/errors.hpp"
#include "rinvex/problem.hpp"
#include "rinvex/report.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct rinvex_problem {
  rinvex::ProblemInstance instance;
};

struct rinvex_report {
  rinvex::ReportDocument document;
};

struct rinvex_chart {
  rinvex::Chart chart;
};

namespace {

thread_local std::string g_last_error;

rinvex_status code_of(rinvex::ErrorCode code) {
  using rinvex::ErrorCode;
  switch (code) {
    case ErrorCode::DomainViolation: return RINVEX_ERR_DOMAIN;
    case ErrorCode::BasePointMismatch: return RINVEX_ERR_BASE_POINT;
    case ErrorCode::ZeroGradient: return RINVEX_ERR_ZERO_GRADIENT;
    case ErrorCode::NoRoot: return RINVEX_ERR_NO_ROOT;
    case ErrorCode::InvalidArgument: return RINVEX_ERR_INVALID_ARGUMENT;
    case ErrorCode::UnknownProblem: return RINVEX_ERR_UNKNOWN_PROBLEM;
    case ErrorCode::SchemaError: return RINVEX_ERR_SCHEMA;
    case ErrorCode::Io: return RINVEX_ERR_IO;
  }
  return RINVEX_ERR_INTERNAL;
}

template <typename Fn>
rinvex_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return RINVEX_OK;
  } catch (const rinvex::Error& e) {
    g_last_error = e.what();
    return code_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  }
  return RINVEX_ERR_INTERNAL;
}

rinvex_status null_arg(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return RINVEX_ERR_NULL;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

rinvex::Vec to_vec(const double* data, int dim) {
  return Eigen::Map<const rinvex::Vec>(data, dim);
}

void from_vec(const rinvex::Vec& v, double* out) {
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v(i);
}

template <typename Fn>
rinvex_status with_problem(rinvex_problem* problem, Fn&& fn) {
  if (!problem) return null_arg("problem");
  return guarded([&] { fn(problem->instance); });
}

}  // namespace

extern "C" {

const char* rinvex_version(void) { return rinvex::kToolVersion; }

const char* rinvex_last_error(void) { return g_last_error.c_str(); }

void rinvex_string_free(char* s) { std::free(s); }

size_t rinvex_builtin_count(void) { return rinvex::builtin_problem_names().size(); }

const char* rinvex_builtin_name(size_t index) {
  const auto& names = rinvex::builtin_problem_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

rinvex_status rinvex_problem_from_builtin(const char* name, rinvex_problem** out) {
  if (!name) return null_arg("name");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    auto instance = rinvex::load_builtin(name);
    instance.validate();
    *out = new rinvex_problem{std::move(instance)};
  });
}

rinvex_status rinvex_problem_from_config(const char* text, rinvex_problem** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new rinvex_problem{rinvex::load_config(text)}; });
}

void rinvex_problem_free(rinvex_problem* problem) { delete problem; }

rinvex_status rinvex_problem_json(const rinvex_problem* problem, char** out) {
  if (!problem) return null_arg("problem");
  if (!out) return null_arg("out");
  return guarded([&] { *out = copy_string(problem->instance.to_json().dump(2)); });
}

rinvex_status rinvex_problem_set_seed(rinvex_problem* problem, uint64_t seed) {
  return with_problem(problem, [&](auto& p) { rinvex::set_seed(p, seed); });
}

rinvex_status rinvex_problem_set_grid(rinvex_problem* problem, int points_per_axis) {
  return with_problem(problem, [&](auto& p) { rinvex::set_grid(p, points_per_axis); });
}

rinvex_status rinvex_problem_set_box(rinvex_problem* problem, const char* spec) {
  if (!spec) return null_arg("spec");
  return with_problem(problem, [&](auto& p) { rinvex::set_box(p, spec); });
}

rinvex_status rinvex_problem_set_order(rinvex_problem* problem, int m) {
  return with_problem(problem, [&](auto& p) { rinvex::set_order(p, m); });
}

rinvex_status rinvex_problem_set_delta(rinvex_problem* problem, double delta) {
  return with_problem(problem, [&](auto& p) { rinvex::set_delta(p, delta); });
}

rinvex_status rinvex_problem_set_tolerance(rinvex_problem* problem, double tolerance) {
  return with_problem(problem, [&](auto& p) { rinvex::set_tolerance(p, tolerance); });
}

rinvex_status rinvex_problem_set_geodesic_mode(rinvex_problem* problem, const char* mode) {
  if (!mode) return null_arg("mode");
  return with_problem(problem, [&](auto& p) { rinvex::set_geodesic_mode(p, mode); });
}

rinvex_status rinvex_problem_set_dominance_mode(rinvex_problem* problem, const char* mode) {
  if (!mode) return null_arg("mode");
  return with_problem(problem, [&](auto& p) { rinvex::set_dominance_mode(p, mode); });
}

rinvex_status rinvex_problem_set_suite(rinvex_problem* problem, const char* csv) {
  if (!csv) return null_arg("csv");
  return with_problem(problem, [&](auto& p) { rinvex::set_suite(p, csv); });
}

rinvex_status rinvex_run_suite(const rinvex_problem* problem, rinvex_report** out) {
  if (!problem) return null_arg("problem");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    problem->instance.validate();
    *out = new rinvex_report{rinvex::run_suite(problem->instance)};
  });
}

void rinvex_report_free(rinvex_report* report) { delete report; }

int rinvex_report_exit_code(const rinvex_report* report) {
  return report ? report->document.exit_code : rinvex::kExitUnexpected;
}

rinvex_status rinvex_report_json(const rinvex_report* report, char** out) {
  if (!report) return null_arg("report");
  if (!out) return null_arg("out");
  return guarded([&] { *out = copy_string(report->document.dump()); });
}

rinvex_status rinvex_report_witness_csv(const rinvex_report* report, char** out) {
  if (!report) return null_arg("report");
  if (!out) return null_arg("out");
  return guarded([&] { *out = copy_string(rinvex::witnesses_csv(report->document)); });
}

size_t rinvex_report_check_count(const rinvex_report* report) { return report ? report->document.checks.size() : 0; }

const char* rinvex_report_check_status(const rinvex_report* report, size_t index) {
  if (!report || index >= report->document.checks.size()) return nullptr;
  return rinvex::to_string(report->document.checks[index].status);
}

rinvex_status rinvex_chart_create(const char* name, rinvex_chart** out) {
  if (!name) return null_arg("name");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new rinvex_chart{rinvex::chart_from_name(name)}; });
}

void rinvex_chart_free(rinvex_chart* chart) { delete chart; }

int rinvex_chart_dim(const rinvex_chart* chart) { return chart ? chart->chart.dim() : 0; }

rinvex_status rinvex_exp_map(const rinvex_chart* chart, const double* p, const double* x, double* out) {
  if (!chart || !p || !x || !out) return null_arg("chart, p, x, out");
  return guarded([&] {
    const auto& c = chart->chart;
    const auto base = c.point(to_vec(p, c.dim()));
    from_vec(c.exp(base, c.tangent(base, to_vec(x, c.dim()))).coords, out);
  });
}

rinvex_status rinvex_log_map(const rinvex_chart* chart, const double* from, const double* to, double* out) {
  if (!chart || !from || !to || !out) return null_arg("chart, from, to, out");
  return guarded([&] {
    const auto& c = chart->chart;
    from_vec(c.log(c.point(to_vec(from, c.dim())), c.point(to_vec(to, c.dim()))).components, out);
  });
}

rinvex_status rinvex_distance(const rinvex_chart* chart, const double* a, const double* b, double* out) {
  if (!chart || !a || !b || !out) return null_arg("chart, a, b, out");
  return guarded([&] {
    const auto& c = chart->chart;
    *out = c.distance(c.point(to_vec(a, c.dim())), c.point(to_vec(b, c.dim())));
  });
}

rinvex_status rinvex_parallel_transport(const rinvex_chart* chart, const double* from, const double* x,
                                        const double* to, double* out) {
  if (!chart || !from || !x || !to || !out) return null_arg("chart, from, x, to, out");
  return guarded([&] {
    const auto& c = chart->chart;
    const auto base = c.point(to_vec(from, c.dim()));
    from_vec(c.transport(c.tangent(base, to_vec(x, c.dim())), c.point(to_vec(to, c.dim()))).components, out);
  });
}

}  // extern "C"
