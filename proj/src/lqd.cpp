#include "stableagg/lqd.hpp"

#include <cmath>
#include <stdexcept>

namespace stableagg {

void validate(const QuantileLevels& levels) {
  if (!(levels.p1 > 0.0) || !(levels.p1 < levels.p2) || !(levels.p2 < 1.0))
    throw std::invalid_argument("QuantileLevels: need 0 < p1 < p2 < 1");
}

const char* to_string(Shape s) {
  switch (s) {
    case Shape::Convex: return "Convex";
    case Shape::Linear: return "Linear";
    case Shape::Concave: return "Concave";
  }
  return "?";
}

double log_quantile_difference(const StableParams& p,
                               const QuantileLevels& levels) {
  validate(levels);
  const double hi = stable_quantile(p, levels.p2);
  const double lo = stable_quantile(p, levels.p1);
  return std::log(hi - lo);
}

double g_alpha(std::span<const double> theta, double alpha) {
  if (theta.empty() || theta[0] != 1.0)
    throw std::invalid_argument("g_alpha: theta must start with theta[0] = 1");
  if (!(alpha > 0.0) || !(alpha <= 2.0))
    throw std::invalid_argument("g_alpha: alpha must be in (0, 2]");
  const std::size_t q = theta.size() - 1;

  double fwd = 0.0, fwd_pow = 0.0;
  for (std::size_t i = 0; i < q; ++i) {
    fwd += theta[i];
    fwd_pow += std::pow(std::fabs(fwd), alpha);
  }
  const double total = fwd + theta[q];

  double bwd = 0.0, bwd_pow = 0.0;
  for (std::size_t i = q; i >= 1; --i) {
    bwd += theta[i];
    bwd_pow += std::pow(std::fabs(bwd), alpha);
  }
  return fwd_pow - static_cast<double>(q) * std::pow(std::fabs(total), alpha) +
         bwd_pow;
}

ConditionStatus check_conditions(const MAModel& m) {
  validate(m);
  const std::size_t q = m.order();
  ConditionStatus st{};
  st.a1 = m.innovation.beta == 0.0;
  st.a2 = true;
  double fwd = 0.0;
  for (std::size_t i = 0; i < q; ++i) {
    fwd += m.theta[i];
    if (fwd < 0.0) st.a2 = false;
  }
  double bwd = 0.0;
  for (std::size_t i = q; i >= 1; --i) {
    bwd += m.theta[i];
    if (bwd < 0.0) st.a2 = false;
  }
  st.formula_valid = st.a1 || st.a2;
  return st;
}

namespace {

double total_pow(const MAModel& m) {
  double total = 0.0;
  for (double t : m.theta) total += t;
  return std::pow(std::fabs(total), m.innovation.alpha);
}

void require_r(const MAModel& m, double r) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::invalid_argument("aggregation level r must be positive");
  if (r < static_cast<double>(m.order()))
    throw std::invalid_argument("aggregation level r must be >= q");
}

}  // namespace

double lqd_formula(const MAModel& m, double r, const QuantileLevels& levels,
                   bool allow_invalid) {
  validate(m);
  validate(levels);
  require_r(m, r);
  if (!allow_invalid && !check_conditions(m).formula_valid)
    throw std::domain_error(
        "lqd_formula: neither a1 nor a2 holds, so the aggregated process is "
        "not a scale/location transform of the innovations and the "
        "closed-form expression does not hold");
  const double alpha = m.innovation.alpha;
  const double arg = r * total_pow(m) + g_alpha(m.theta, alpha);
  if (!(arg > 0.0))
    throw std::domain_error("lqd_formula: r|sum theta|^alpha + g <= 0");
  const double zeta0 = log_quantile_difference(m.innovation, levels);
  return std::log(arg) / alpha + zeta0;
}

double lqd_slope(const MAModel& m, double r) {
  validate(m);
  require_r(m, r);
  const double alpha = m.innovation.alpha;
  const double lead = r * total_pow(m);
  const double denom = lead + g_alpha(m.theta, alpha);
  if (!(denom > 0.0))
    throw std::domain_error("lqd_slope: r|sum theta|^alpha + g <= 0");
  return lead / denom / alpha;
}

double lqd_curvature(const MAModel& m, double r) {
  validate(m);
  require_r(m, r);
  const double alpha = m.innovation.alpha;
  const double g = g_alpha(m.theta, alpha);
  const double lead = r * total_pow(m);
  const double denom = lead + g;
  if (!(denom > 0.0))
    throw std::domain_error("lqd_curvature: r|sum theta|^alpha + g <= 0");
  return lead * g / (denom * denom) / alpha;
}

Shape classify_shape(const MAModel& m) {
  validate(m);
  if (!check_conditions(m).formula_valid)
    throw std::domain_error(
        "classify_shape: neither a1 nor a2 holds for this model");
  const double g = g_alpha(m.theta, m.innovation.alpha);
  if (g > kShapeTol) return Shape::Convex;
  if (g < -kShapeTol) return Shape::Concave;
  return Shape::Linear;
}

}  // namespace stableagg
