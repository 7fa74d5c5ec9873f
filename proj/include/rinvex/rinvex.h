#ifndef RINVEX_RINVEX_H
#define RINVEX_RINVEX_H

/*
 * C interface to the rinvex checker library.
 *
 * Every function returns a rinvex_status; on failure a message is available
 * from rinvex_last_error() on the same thread until the next call. Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with rinvex_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RINVEX_BUILDING)
#    define RINVEX_API __declspec(dllexport)
#  else
#    define RINVEX_API __declspec(dllimport)
#  endif
#else
#  define RINVEX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rinvex_status {
  RINVEX_OK = 0,
  RINVEX_ERR_DOMAIN = 1,
  RINVEX_ERR_BASE_POINT = 2,
  RINVEX_ERR_ZERO_GRADIENT = 3,
  RINVEX_ERR_NO_ROOT = 4,
  RINVEX_ERR_INVALID_ARGUMENT = 5,
  RINVEX_ERR_UNKNOWN_PROBLEM = 6,
  RINVEX_ERR_SCHEMA = 7,
  RINVEX_ERR_IO = 8,
  RINVEX_ERR_NULL = 9,
  RINVEX_ERR_INTERNAL = 10
} rinvex_status;

typedef struct rinvex_problem rinvex_problem;
typedef struct rinvex_report rinvex_report;
typedef struct rinvex_chart rinvex_chart;

RINVEX_API const char* rinvex_version(void);
RINVEX_API const char* rinvex_last_error(void);
RINVEX_API void rinvex_string_free(char* s);

RINVEX_API size_t rinvex_builtin_count(void);
/* NULL when index is out of range. */
RINVEX_API const char* rinvex_builtin_name(size_t index);

RINVEX_API rinvex_status rinvex_problem_from_builtin(const char* name, rinvex_problem** out);
/* JSON object or key = value text. */
RINVEX_API rinvex_status rinvex_problem_from_config(const char* text, rinvex_problem** out);
RINVEX_API void rinvex_problem_free(rinvex_problem* problem);
RINVEX_API rinvex_status rinvex_problem_json(const rinvex_problem* problem, char** out);

RINVEX_API rinvex_status rinvex_problem_set_seed(rinvex_problem* problem, uint64_t seed);
RINVEX_API rinvex_status rinvex_problem_set_grid(rinvex_problem* problem, int points_per_axis);
RINVEX_API rinvex_status rinvex_problem_set_box(rinvex_problem* problem, const char* spec);
RINVEX_API rinvex_status rinvex_problem_set_order(rinvex_problem* problem, int m);
RINVEX_API rinvex_status rinvex_problem_set_delta(rinvex_problem* problem, double delta);
RINVEX_API rinvex_status rinvex_problem_set_tolerance(rinvex_problem* problem, double tolerance);
RINVEX_API rinvex_status rinvex_problem_set_geodesic_mode(rinvex_problem* problem, const char* mode);
RINVEX_API rinvex_status rinvex_problem_set_dominance_mode(rinvex_problem* problem, const char* mode);
RINVEX_API rinvex_status rinvex_problem_set_suite(rinvex_problem* problem, const char* csv);

RINVEX_API rinvex_status rinvex_run_suite(const rinvex_problem* problem, rinvex_report** out);
RINVEX_API void rinvex_report_free(rinvex_report* report);
/* 0 expectations met, 1 unexpected verdicts. */
RINVEX_API int rinvex_report_exit_code(const rinvex_report* report);
RINVEX_API rinvex_status rinvex_report_json(const rinvex_report* report, char** out);
RINVEX_API rinvex_status rinvex_report_witness_csv(const rinvex_report* report, char** out);
RINVEX_API size_t rinvex_report_check_count(const rinvex_report* report);
/* Status name of the i-th check, NULL when out of range. */
RINVEX_API const char* rinvex_report_check_status(const rinvex_report* report, size_t index);

/* Geometry primitives. name: "positive_orthant2" or "euclidean:N". */
RINVEX_API rinvex_status rinvex_chart_create(const char* name, rinvex_chart** out);
RINVEX_API void rinvex_chart_free(rinvex_chart* chart);
RINVEX_API int rinvex_chart_dim(const rinvex_chart* chart);
RINVEX_API rinvex_status rinvex_exp_map(const rinvex_chart* chart, const double* p, const double* x, double* out);
RINVEX_API rinvex_status rinvex_log_map(const rinvex_chart* chart, const double* from, const double* to, double* out);
RINVEX_API rinvex_status rinvex_distance(const rinvex_chart* chart, const double* a, const double* b, double* out);
/* Transports x from the tangent space at `from` to the one at `to`. */
RINVEX_API rinvex_status rinvex_parallel_transport(const rinvex_chart* chart, const double* from, const double* x,
                                                   const double* to, double* out);

#ifdef __cplusplus
}
#endif

#endif /* RINVEX_RINVEX_H */
