#include "stableagg.h"

#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "stableagg/lqd.hpp"
#include "stableagg/ma.hpp"
#include "stableagg/region.hpp"
#include "stableagg/stable.hpp"
#include "stableagg/verify.hpp"

namespace {

thread_local std::string g_last_error;

template <typename Fn>
stagg_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return STAGG_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return STAGG_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return STAGG_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return STAGG_ERR_NUMERIC;
  } catch (...) {
    g_last_error = "unknown error";
    return STAGG_ERR_NUMERIC;
  }
}

stagg_status require(bool ok, const char* message) {
  if (ok) return STAGG_OK;
  g_last_error = message;
  return STAGG_ERR_INVALID_ARGUMENT;
}

stableagg::StableParams from_c(const stagg_stable_params& p) {
  return {p.alpha, p.beta, p.gamma, p.delta};
}

stagg_stable_params to_c(const stableagg::StableParams& p) {
  return {p.alpha, p.beta, p.gamma, p.delta};
}

stagg_subregion to_c(const stableagg::SubRegionLabel& label) {
  stagg_subregion out{};
  switch (label.kind) {
    case stableagg::SubRegionKind::Origin: out.kind = STAGG_SUBREGION_ORIGIN; break;
    case stableagg::SubRegionKind::R1: out.kind = STAGG_SUBREGION_R1; break;
    case stableagg::SubRegionKind::R2: out.kind = STAGG_SUBREGION_R2; break;
    case stableagg::SubRegionKind::R3: out.kind = STAGG_SUBREGION_R3; break;
    case stableagg::SubRegionKind::R4: out.kind = STAGG_SUBREGION_R4; break;
    case stableagg::SubRegionKind::R5: out.kind = STAGG_SUBREGION_R5; break;
    case stableagg::SubRegionKind::Border:
      out.kind = STAGG_SUBREGION_BORDER;
      out.border_a = label.border_a;
      out.border_b = label.border_b;
      break;
    case stableagg::SubRegionKind::NotInvertible:
      out.kind = STAGG_SUBREGION_NOT_INVERTIBLE;
      break;
  }
  return out;
}

int to_c(stableagg::GSign s) {
  switch (s) {
    case stableagg::GSign::Positive: return STAGG_G_POSITIVE;
    case stableagg::GSign::Negative: return STAGG_G_NEGATIVE;
    case stableagg::GSign::Zero: break;
  }
  return STAGG_G_ZERO;
}

}  // namespace

struct stagg_model {
  stableagg::MAModel impl;
};

struct stagg_raster {
  std::vector<stableagg::RasterCell> cells;
};

struct stagg_trace {
  std::vector<std::array<double, 2>> points;
};

extern "C" {

const char* stagg_last_error_message(void) { return g_last_error.c_str(); }

stagg_status stagg_stable_linear_transform(const stagg_stable_params* in,
                                           double a, double b,
                                           stagg_stable_params* out) {
  if (auto st = require(in && out, "null pointer argument")) return st;
  return guarded([&] { *out = to_c(stableagg::linear_transform(from_c(*in), a, b)); });
}

stagg_status stagg_stable_sum(const stagg_stable_params* parts, size_t n,
                              stagg_stable_params* out) {
  if (auto st = require(parts && out, "null pointer argument")) return st;
  return guarded([&] {
    std::vector<stableagg::StableParams> v;
    v.reserve(n);
    for (size_t i = 0; i < n; ++i) v.push_back(from_c(parts[i]));
    *out = to_c(stableagg::sum_independent(v));
  });
}

stagg_status stagg_stable_cdf(const stagg_stable_params* p, double x,
                              double* out) {
  if (auto st = require(p && out, "null pointer argument")) return st;
  return guarded([&] { *out = stableagg::stable_cdf(from_c(*p), x); });
}

stagg_status stagg_stable_quantile(const stagg_stable_params* p, double prob,
                                   double* out) {
  if (auto st = require(p && out, "null pointer argument")) return st;
  return guarded([&] { *out = stableagg::stable_quantile(from_c(*p), prob); });
}

stagg_status stagg_stable_sample(const stagg_stable_params* p, size_t n,
                                 uint64_t seed, uint64_t stream, double* out) {
  if (auto st = require(p && out, "null pointer argument")) return st;
  return guarded([&] {
    const auto draws = stableagg::sample_stable(from_c(*p), n, seed, stream);
    std::memcpy(out, draws.data(), draws.size() * sizeof(double));
  });
}

stagg_status stagg_model_create(const double* theta, size_t len,
                                const stagg_stable_params* innovation,
                                stagg_model** out) {
  if (auto st = require(theta && innovation && out, "null pointer argument"))
    return st;
  return guarded([&] {
    auto m = std::make_unique<stagg_model>();
    m->impl.theta.assign(theta, theta + len);
    m->impl.innovation = from_c(*innovation);
    stableagg::validate(m->impl);
    *out = m.release();
  });
}

void stagg_model_destroy(stagg_model* m) { delete m; }

size_t stagg_model_order(const stagg_model* m) {
  return m ? m->impl.order() : 0;
}

stagg_status stagg_aggregation_coefficients(const stagg_model* m, size_t r,
                                            double* out, int* theorem_range) {
  if (auto st = require(m && out, "null pointer argument")) return st;
  return guarded([&] {
    const auto coeff = stableagg::aggregation_coefficients(m->impl, r);
    std::memcpy(out, coeff.c.data(), coeff.c.size() * sizeof(double));
    if (theorem_range) *theorem_range = coeff.theorem_range ? 1 : 0;
  });
}

stagg_status stagg_aggregate_distribution(const stagg_model* m, size_t r,
                                          stagg_stable_params* out) {
  if (auto st = require(m && out, "null pointer argument")) return st;
  return guarded([&] { *out = to_c(stableagg::aggregate_distribution(m->impl, r)); });
}

stagg_status stagg_aggregate_series(const double* x, size_t n, size_t r,
                                    double* out) {
  if (auto st = require(x && out, "null pointer argument")) return st;
  return guarded([&] {
    const auto agg = stableagg::aggregate_series({x, n}, r);
    std::memcpy(out, agg.data(), agg.size() * sizeof(double));
  });
}

stagg_status stagg_log_quantile_difference(const stagg_stable_params* p,
                                           double p1, double p2, double* out) {
  if (auto st = require(p && out, "null pointer argument")) return st;
  return guarded([&] {
    *out = stableagg::log_quantile_difference(from_c(*p), {p1, p2});
  });
}

stagg_status stagg_g_alpha(const double* theta, size_t len, double alpha,
                           double* out) {
  if (auto st = require(theta && out, "null pointer argument")) return st;
  return guarded([&] { *out = stableagg::g_alpha({theta, len}, alpha); });
}

stagg_status stagg_check_conditions(const stagg_model* m, int* a1, int* a2,
                                    int* formula_valid) {
  if (auto st = require(m != nullptr, "null pointer argument")) return st;
  return guarded([&] {
    const auto cs = stableagg::check_conditions(m->impl);
    if (a1) *a1 = cs.a1 ? 1 : 0;
    if (a2) *a2 = cs.a2 ? 1 : 0;
    if (formula_valid) *formula_valid = cs.formula_valid ? 1 : 0;
  });
}

stagg_status stagg_lqd_formula(const stagg_model* m, double r, double p1,
                               double p2, int allow_invalid, double* out) {
  if (auto st = require(m && out, "null pointer argument")) return st;
  return guarded([&] {
    *out = stableagg::lqd_formula(m->impl, r, {p1, p2}, allow_invalid != 0);
  });
}

stagg_status stagg_lqd_slope(const stagg_model* m, double r, double* out) {
  if (auto st = require(m && out, "null pointer argument")) return st;
  return guarded([&] { *out = stableagg::lqd_slope(m->impl, r); });
}

stagg_status stagg_lqd_curvature(const stagg_model* m, double r, double* out) {
  if (auto st = require(m && out, "null pointer argument")) return st;
  return guarded([&] { *out = stableagg::lqd_curvature(m->impl, r); });
}

stagg_status stagg_classify_shape(const stagg_model* m, int* shape) {
  if (auto st = require(m && shape, "null pointer argument")) return st;
  return guarded([&] {
    switch (stableagg::classify_shape(m->impl)) {
      case stableagg::Shape::Convex: *shape = STAGG_SHAPE_CONVEX; break;
      case stableagg::Shape::Linear: *shape = STAGG_SHAPE_LINEAR; break;
      case stableagg::Shape::Concave: *shape = STAGG_SHAPE_CONCAVE; break;
    }
  });
}

stagg_status stagg_is_invertible(const double* theta, size_t len, int* out) {
  if (auto st = require(theta && out, "null pointer argument")) return st;
  return guarded([&] { *out = stableagg::is_invertible({theta, len}) ? 1 : 0; });
}

stagg_status stagg_ma2_subregion(double theta1, double theta2,
                                 stagg_subregion* out) {
  if (auto st = require(out != nullptr, "null pointer argument")) return st;
  return guarded([&] { *out = to_c(stableagg::ma2_subregion(theta1, theta2)); });
}

stagg_status stagg_classify_g_sign(const double* theta, size_t len,
                                   double alpha, int* out) {
  if (auto st = require(theta && out, "null pointer argument")) return st;
  return guarded([&] {
    *out = to_c(stableagg::classify_g_sign({theta, len}, alpha));
  });
}

stagg_status stagg_region_raster(double alpha, double t1_min, double t1_max,
                                 double t2_min, double t2_max, size_t n1,
                                 size_t n2, stagg_raster** out) {
  if (auto st = require(out != nullptr, "null pointer argument")) return st;
  return guarded([&] {
    stableagg::RasterSpec spec{t1_min, t1_max, t2_min, t2_max, n1, n2};
    auto raster = std::make_unique<stagg_raster>();
    raster->cells = stableagg::region_raster(alpha, spec);
    *out = raster.release();
  });
}

void stagg_raster_destroy(stagg_raster* raster) { delete raster; }

size_t stagg_raster_size(const stagg_raster* raster) {
  return raster ? raster->cells.size() : 0;
}

stagg_status stagg_raster_cell(const stagg_raster* raster, size_t i,
                               double* theta1, double* theta2,
                               stagg_subregion* region, int* g_sign) {
  if (auto st = require(raster != nullptr, "null pointer argument")) return st;
  if (auto st = require(i < raster->cells.size(), "raster index out of range"))
    return st;
  const auto& cell = raster->cells[i];
  if (theta1) *theta1 = cell.theta1;
  if (theta2) *theta2 = cell.theta2;
  if (region) *region = to_c(cell.region);
  if (g_sign) *g_sign = to_c(cell.g_sign);
  return STAGG_OK;
}

stagg_status stagg_trace_d_alpha(double alpha, size_t scanlines,
                                 stagg_trace** out) {
  if (auto st = require(out != nullptr, "null pointer argument")) return st;
  return guarded([&] {
    auto trace = std::make_unique<stagg_trace>();
    trace->points = stableagg::trace_d_alpha(alpha, scanlines);
    *out = trace.release();
  });
}

void stagg_trace_destroy(stagg_trace* trace) { delete trace; }

size_t stagg_trace_size(const stagg_trace* trace) {
  return trace ? trace->points.size() : 0;
}

stagg_status stagg_trace_point(const stagg_trace* trace, size_t i,
                               double* theta1, double* theta2) {
  if (auto st = require(trace != nullptr, "null pointer argument")) return st;
  if (auto st = require(i < trace->points.size(), "trace index out of range"))
    return st;
  if (theta1) *theta1 = trace->points[i][0];
  if (theta2) *theta2 = trace->points[i][1];
  return STAGG_OK;
}

stagg_status stagg_simulate_ma(const stagg_model* m, size_t n, uint64_t seed,
                               double* out) {
  if (auto st = require(m && out, "null pointer argument")) return st;
  return guarded([&] {
    const auto path = stableagg::simulate_ma(m->impl, n, seed);
    std::memcpy(out, path.data(), path.size() * sizeof(double));
  });
}

stagg_status stagg_empirical_lqd(const double* x, size_t n, double p1,
                                 double p2, double* out) {
  if (auto st = require(x && out, "null pointer argument")) return st;
  return guarded([&] { *out = stableagg::empirical_lqd({x, n}, {p1, p2}); });
}

stagg_status stagg_verify(const stagg_model* m, size_t r, double p1, double p2,
                          size_t n, uint64_t seed, double k,
                          stagg_verification_report* out) {
  if (auto st = require(m && out, "null pointer argument")) return st;
  return guarded([&] {
    const auto rep = stableagg::verify(m->impl, r, {p1, p2}, n, seed, k);
    out->analytic_lqd = rep.analytic_lqd;
    out->empirical_lqd = rep.empirical_lqd;
    out->has_formula = rep.formula_lqd.has_value() ? 1 : 0;
    out->formula_lqd = rep.formula_lqd.value_or(0.0);
    out->abs_error = rep.abs_error;
    out->mc_stderr_estimate = rep.mc_stderr_estimate;
    out->k = rep.k;
    out->pass = rep.pass ? 1 : 0;
  });
}

}  // extern "C"
