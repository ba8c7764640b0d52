/*
 * C interface to the projlmo library.
 *
 * Sets are opaque handles created from a text or JSON specification and
 * released with plm_set_free. Every function returns a plm_status; on
 * failure plm_last_error() holds a message for the calling thread.
 * Vectors are passed as (pointer, length) pairs of doubles and output
 * buffers must hold at least plm_set_dim() entries.
 */
#ifndef PROJLMO_H
#define PROJLMO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PLM_API __declspec(dllexport)
#elif defined(__GNUC__)
#define PLM_API __attribute__((visibility("default")))
#else
#define PLM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum plm_status {
    PLM_OK = 0,
    PLM_ERR_NULL = 1,
    PLM_ERR_INPUT = 2,
    PLM_ERR_DIMENSION = 3,
    PLM_ERR_NONFINITE = 4,
    PLM_ERR_NUMERICAL = 5,
    PLM_ERR_INTERNAL = 6
} plm_status;

typedef struct plm_set plm_set;
typedef struct plm_text plm_text;

typedef struct plm_certificate {
    double gap;
    double raw_gap;
    double bound; /* NaN when absent */
    double lambda;
    double epsilon; /* NaN when lambda was supplied directly */
    double tolerance;
    int relaxed;
} plm_certificate;

typedef struct plm_lambda_star_result {
    double lambda_star;
    double exactness_gap;
    double tol_exact;
    double min_norm_distance;
    int exact;
    int min_norm_match;
    size_t search_iterations;
} plm_lambda_star_result;

typedef struct plm_command_result {
    int exit_code; /* 0 pass, 1 check failed / not converged, 2 usage */
    plm_text* output;
    plm_text* notes;
} plm_command_result;

PLM_API const char* plm_version(void);
PLM_API const char* plm_last_error(void);
PLM_API const char* plm_status_string(plm_status status);

/* Sets */
PLM_API plm_status plm_set_parse(const char* spec, plm_set** out);
PLM_API void plm_set_free(plm_set* set);
PLM_API plm_status plm_set_dim(const plm_set* set, size_t* dim);
PLM_API plm_status plm_set_kind(const plm_set* set, const char** kind);
PLM_API plm_status plm_set_constants(const plm_set* set, double* diameter, double* norm_bound);
PLM_API plm_status plm_set_format(const plm_set* set, plm_text** out);

/* Oracles */
PLM_API plm_status plm_project(const plm_set* set, const double* x, size_t n, double* out);
PLM_API plm_status plm_lmo(const plm_set* set, const double* x, size_t n, double* out);
PLM_API plm_status plm_contains(const plm_set* set, const double* x, size_t n, double tol, int* inside);
PLM_API plm_status plm_min_linear_value(const plm_set* set, const double* x, size_t n, double* value);

/* Reduction */
PLM_API plm_status plm_choose_lambda(const plm_set* set, double epsilon, double* lambda);
PLM_API plm_status plm_gap(const plm_set* set, const double* candidate, const double* x, size_t n,
                           double* gap);
PLM_API plm_status plm_approx_lmo(const plm_set* set, const double* x, size_t n, double epsilon,
                                  double* point, plm_certificate* cert);
PLM_API plm_status plm_approx_lmo_with_lambda(const plm_set* set, const double* x, size_t n, double lambda,
                                              double* point, plm_certificate* cert);
PLM_API plm_status plm_check_projlmo_identity(const plm_set* set, const double* x, size_t n,
                                              plm_certificate* cert);
/* Non-polytope sets are converted to vertex form when practical. tol_exact <= 0 selects the default. */
PLM_API plm_status plm_lambda_star(const plm_set* set, const double* x, size_t n, double tol_exact,
                                   double lambda0, int max_doublings, double* point,
                                   plm_lambda_star_result* result);

/* Minimum-norm-point projection onto conv(vertices); vertices row-major, count x dim.
 * tol <= 0 and max_iter == 0 select the defaults. weights may be NULL. */
PLM_API plm_status plm_mnp_project(const double* vertices, size_t count, size_t dim, const double* x,
                                   double tol, size_t max_iter, double* point, double* weights,
                                   int* converged);

/* Commands. Results own their text handles; release with plm_command_result_free. */
typedef struct plm_verify_config {
    const plm_set* set; /* NULL: random instances of every family */
    uint64_t seed;
    size_t trials;
    unsigned threads; /* 0: hardware concurrency */
} plm_verify_config;

PLM_API plm_status plm_run_verify(const plm_verify_config* config, plm_command_result* result);
/* lambda_grid uses the a:b:steps log-spaced syntax */
PLM_API plm_status plm_run_sweep(const plm_set* set, const double* x, size_t n, const char* lambda_grid,
                                 plm_command_result* result);
PLM_API plm_status plm_run_lambdastar(const plm_set* set, const double* x, size_t n, double tol_exact,
                                      double lambda0, int max_doublings, plm_command_result* result);

typedef enum plm_eps_schedule { PLM_EPS_EXACT = 0, PLM_EPS_CONSTANT = 1, PLM_EPS_HARMONIC = 2 } plm_eps_schedule;

PLM_API plm_status plm_run_fw(const plm_set* set, const double* target, size_t n, plm_eps_schedule schedule,
                              double eps_scale, size_t max_iter, double stop_gap, plm_command_result* result);
PLM_API plm_status plm_run_bench(const plm_set* set, uint64_t seed, size_t trials, double epsilon,
                                 plm_command_result* result);
PLM_API void plm_command_result_free(plm_command_result* result);

/* Text handles */
PLM_API const char* plm_text_data(const plm_text* text);
PLM_API size_t plm_text_size(const plm_text* text);
PLM_API void plm_text_free(plm_text* text);

#ifdef __cplusplus
}
#endif

#endif /* PROJLMO_H */
