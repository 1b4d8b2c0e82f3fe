/*
 * C API of the stableagg shared library: stable-distribution arithmetic,
 * temporal aggregation of stable MA(q) processes, log quantile differences,
 * MA(2) invertibility-region classification, and Monte Carlo verification.
 *
 * Conventions:
 *  - every fallible call returns a stagg_status and writes results through
 *    out-parameters; STAGG_OK means the outputs are valid;
 *  - stagg_last_error_message() describes the most recent failure on the
 *    calling thread;
 *  - variable-size results (models, rasters, traces) are opaque handles
 *    released with the matching _destroy function.
 */

#ifndef STABLEAGG_H
#define STABLEAGG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define STAGG_API __declspec(dllexport)
#else
#define STAGG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stagg_status {
  STAGG_OK = 0,
  STAGG_ERR_INVALID_ARGUMENT = 1, /* precondition violated */
  STAGG_ERR_DOMAIN = 2,           /* outside a formula's validity */
  STAGG_ERR_NUMERIC = 3           /* internal numerical failure */
} stagg_status;

/* Message for the last failing call on this thread; empty string if none. */
STAGG_API const char* stagg_last_error_message(void);

/* S0-parameterized stable law: 0 < alpha <= 2, |beta| <= 1, gamma > 0. */
typedef struct stagg_stable_params {
  double alpha;
  double beta;
  double gamma;
  double delta;
} stagg_stable_params;

/* ---- stable-core ------------------------------------------------------- */

/* Law of a*X + b; requires a != 0. */
STAGG_API stagg_status stagg_stable_linear_transform(
    const stagg_stable_params* in, double a, double b,
    stagg_stable_params* out);

/* Law of the sum of n independent variables sharing one alpha. */
STAGG_API stagg_status stagg_stable_sum(const stagg_stable_params* parts,
                                        size_t n, stagg_stable_params* out);

STAGG_API stagg_status stagg_stable_cdf(const stagg_stable_params* p, double x,
                                        double* out);

STAGG_API stagg_status stagg_stable_quantile(const stagg_stable_params* p,
                                             double prob, double* out);

/* n iid draws, deterministic in (seed, stream); out has room for n. */
STAGG_API stagg_status stagg_stable_sample(const stagg_stable_params* p,
                                           size_t n, uint64_t seed,
                                           uint64_t stream, double* out);

/* ---- MA model and aggregation ------------------------------------------ */

/* Opaque MA(q) model handle. theta holds the full q+1 vector with
 * theta[0] = 1. */
typedef struct stagg_model stagg_model;

STAGG_API stagg_status stagg_model_create(const double* theta, size_t len,
                                          const stagg_stable_params* innovation,
                                          stagg_model** out);
STAGG_API void stagg_model_destroy(stagg_model* m);
STAGG_API size_t stagg_model_order(const stagg_model* m);

/* Filter coefficients of S_t^(r); out has room for r + q values.
 * theorem_range (optional) reports whether r >= q. */
STAGG_API stagg_status stagg_aggregation_coefficients(const stagg_model* m,
                                                      size_t r, double* out,
                                                      int* theorem_range);

/* S0 parameters of the aggregated process S_t^(r). */
STAGG_API stagg_status stagg_aggregate_distribution(const stagg_model* m,
                                                    size_t r,
                                                    stagg_stable_params* out);

/* Rolling sums of r consecutive values; out has room for n - r + 1. */
STAGG_API stagg_status stagg_aggregate_series(const double* x, size_t n,
                                              size_t r, double* out);

/* ---- log quantile difference ------------------------------------------- */

STAGG_API stagg_status stagg_log_quantile_difference(
    const stagg_stable_params* p, double p1, double p2, double* out);

/* Shape function g_alpha(theta); theta is the full vector with theta[0]=1. */
STAGG_API stagg_status stagg_g_alpha(const double* theta, size_t len,
                                     double alpha, double* out);

STAGG_API stagg_status stagg_check_conditions(const stagg_model* m, int* a1,
                                              int* a2, int* formula_valid);

/* Closed-form aggregated LQD; real r >= q. allow_invalid computes the
 * expression even when neither a1 nor a2 holds. */
STAGG_API stagg_status stagg_lqd_formula(const stagg_model* m, double r,
                                         double p1, double p2,
                                         int allow_invalid, double* out);

STAGG_API stagg_status stagg_lqd_slope(const stagg_model* m, double r,
                                       double* out);
STAGG_API stagg_status stagg_lqd_curvature(const stagg_model* m, double r,
                                           double* out);

typedef enum stagg_shape {
  STAGG_SHAPE_CONVEX = 1,
  STAGG_SHAPE_LINEAR = 0,
  STAGG_SHAPE_CONCAVE = -1
} stagg_shape;

STAGG_API stagg_status stagg_classify_shape(const stagg_model* m, int* shape);

/* ---- MA(2) invertibility region ---------------------------------------- */

STAGG_API stagg_status stagg_is_invertible(const double* theta, size_t len,
                                           int* out);

typedef enum stagg_subregion_kind {
  STAGG_SUBREGION_ORIGIN = 0,
  STAGG_SUBREGION_R1 = 1,
  STAGG_SUBREGION_R2 = 2,
  STAGG_SUBREGION_R3 = 3,
  STAGG_SUBREGION_R4 = 4,
  STAGG_SUBREGION_R5 = 5,
  STAGG_SUBREGION_BORDER = 6,
  STAGG_SUBREGION_NOT_INVERTIBLE = 7
} stagg_subregion_kind;

typedef struct stagg_subregion {
  int kind;     /* stagg_subregion_kind */
  int border_a; /* adjacent sub-regions when kind == BORDER, a < b */
  int border_b;
} stagg_subregion;

STAGG_API stagg_status stagg_ma2_subregion(double theta1, double theta2,
                                           stagg_subregion* out);

typedef enum stagg_g_sign {
  STAGG_G_POSITIVE = 1,
  STAGG_G_ZERO = 0,
  STAGG_G_NEGATIVE = -1
} stagg_g_sign;

STAGG_API stagg_status stagg_classify_g_sign(const double* theta, size_t len,
                                             double alpha, int* out);

/* Opaque raster of sub-region / g-sign classifications at cell centers. */
typedef struct stagg_raster stagg_raster;

STAGG_API stagg_status stagg_region_raster(double alpha, double t1_min,
                                           double t1_max, double t2_min,
                                           double t2_max, size_t n1, size_t n2,
                                           stagg_raster** out);
STAGG_API void stagg_raster_destroy(stagg_raster* raster);
STAGG_API size_t stagg_raster_size(const stagg_raster* raster);
/* Cell i in row-major order (theta1 varying fastest). g_sign is meaningful
 * only when region->kind != STAGG_SUBREGION_NOT_INVERTIBLE. */
STAGG_API stagg_status stagg_raster_cell(const stagg_raster* raster, size_t i,
                                         double* theta1, double* theta2,
                                         stagg_subregion* region, int* g_sign);

/* Opaque list of points on the zero set D_alpha, 1 < alpha <= 2. */
typedef struct stagg_trace stagg_trace;

STAGG_API stagg_status stagg_trace_d_alpha(double alpha, size_t scanlines,
                                           stagg_trace** out);
STAGG_API void stagg_trace_destroy(stagg_trace* trace);
STAGG_API size_t stagg_trace_size(const stagg_trace* trace);
STAGG_API stagg_status stagg_trace_point(const stagg_trace* trace, size_t i,
                                         double* theta1, double* theta2);

/* ---- Monte Carlo verification ------------------------------------------ */

/* n values of X_t from n + q innovation draws; deterministic in seed. */
STAGG_API stagg_status stagg_simulate_ma(const stagg_model* m, size_t n,
                                         uint64_t seed, double* out);

/* Empirical LQD with type-7 interpolated quantiles; needs n >= 100. */
STAGG_API stagg_status stagg_empirical_lqd(const double* x, size_t n, double p1,
                                           double p2, double* out);

typedef struct stagg_verification_report {
  double analytic_lqd;  /* via aggregate-distribution quantiles */
  double empirical_lqd; /* from the simulated, aggregated path */
  double formula_lqd;   /* valid only when has_formula != 0 */
  int has_formula;      /* conditions a1 or a2 held */
  double abs_error;
  double mc_stderr_estimate;
  double k;
  int pass;
} stagg_verification_report;

/* Simulates, aggregates, and compares empirical vs. analytic LQD; pass iff
 * abs_error <= k * batch-means stderr. Requires r >= max(q,1), n >= 10^4. */
STAGG_API stagg_status stagg_verify(const stagg_model* m, size_t r, double p1,
                                    double p2, size_t n, uint64_t seed,
                                    double k, stagg_verification_report* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* STABLEAGG_H */
