#include "stableagg/ma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stableagg {

namespace {

constexpr double kPi = std::numbers::pi;

struct Kahan {
  double sum = 0.0;
  double comp = 0.0;
  void add(double term) {
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

/// Direct evaluation of the aggregated-parameter expressions from the
/// filter coefficients; used to cross-check the P1/P2 composition.
StableParams aggregate_params_direct(const MAModel& m,
                                     const AggCoefficients& coeff) {
  const double alpha = m.innovation.alpha;
  const double beta0 = m.innovation.beta;
  const double gamma0 = m.innovation.gamma;
  const double delta0 = m.innovation.delta;

  Kahan abs_pow, signed_pow, csum;
  for (double c : coeff.c) {
    const double a = std::fabs(c);
    abs_pow.add(std::pow(a, alpha));
    signed_pow.add(sign(c) * std::pow(a, alpha));
    csum.add(c);
  }
  const double gamma_r = std::pow(abs_pow.sum, 1.0 / alpha) * gamma0;
  const double beta_r = signed_pow.sum / abs_pow.sum * beta0;

  double delta_r;
  if (alpha_is_one(alpha)) {
    Kahan corr;  // sum sign(c)|c| ln(|c| gamma0); c = 0 contributes nothing
    for (double c : coeff.c) {
      if (c != 0.0) corr.add(sign(c) * std::fabs(c) * std::log(std::fabs(c) * gamma0));
    }
    delta_r = csum.sum * delta0 +
              2.0 / kPi *
                  (beta_r * gamma_r * std::log(gamma_r) - beta0 * gamma0 * corr.sum);
  } else {
    Kahan corr;  // sum sign(c)|c| = sum c
    for (double c : coeff.c) corr.add(sign(c) * std::fabs(c));
    delta_r = csum.sum * delta0 +
              std::tan(kPi * alpha / 2.0) *
                  (beta_r * gamma_r - beta0 * gamma0 * corr.sum);
  }
  return {alpha, beta_r, gamma_r, delta_r};
}

}  // namespace

void validate(const MAModel& m) {
  if (m.theta.empty())
    throw std::invalid_argument("MAModel: theta must contain theta[0]");
  if (m.theta[0] != 1.0)
    throw std::invalid_argument("MAModel: theta[0] must equal 1");
  for (double t : m.theta)
    if (!std::isfinite(t))
      throw std::invalid_argument("MAModel: theta entries must be finite");
  validate(m.innovation);
}

AggCoefficients aggregation_coefficients(const MAModel& m, std::size_t r) {
  validate(m);
  if (r < 1) throw std::invalid_argument("aggregation_coefficients: r >= 1");
  const std::size_t q = m.order();
  AggCoefficients out;
  out.r = r;
  out.theorem_range = r >= q;
  out.c.assign(r + q, 0.0);

  if (out.theorem_range) {
    // Three-branch closed form: prefix sums, full sum, suffix sums.
    double acc = 0.0;
    for (std::size_t j = 0; j < q; ++j) {
      acc += m.theta[j];
      out.c[j] = acc;
    }
    const double total = acc + m.theta[q];
    for (std::size_t j = q; j < r; ++j) out.c[j] = total;
    for (std::size_t j = r; j < r + q; ++j) {
      double s = 0.0;
      for (std::size_t i = j - r + 1; i <= q; ++i) s += m.theta[i];
      out.c[j] = s;
    }
  } else {
    // r < q: the defining double sum over the aggregation window.
    for (std::size_t j = 0; j < r + q; ++j) {
      const std::size_t k_lo = j + 1 > r ? j - r + 1 : 0;
      const std::size_t k_hi = std::min(j, q);
      double s = 0.0;
      for (std::size_t k = k_lo; k <= k_hi; ++k) s += m.theta[k];
      out.c[j] = s;
    }
  }
  return out;
}

StableParams aggregate_distribution(const MAModel& m, std::size_t r) {
  const AggCoefficients coeff = aggregation_coefficients(m, r);

  // Primary path: each nonzero c_j scales one innovation (P1), the terms
  // combine under P2. Zero coefficients contribute a point mass at 0.
  std::vector<StableParams> parts;
  parts.reserve(coeff.c.size());
  for (double c : coeff.c)
    if (c != 0.0) parts.push_back(linear_transform(m.innovation, c, 0.0));
  const StableParams composed = sum_independent(parts);

  const StableParams direct = aggregate_params_direct(m, coeff);
  const auto close = [](double a, double b) {
    return std::fabs(a - b) <= 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)});
  };
  if (!close(composed.beta, direct.beta) || !close(composed.gamma, direct.gamma) ||
      !close(composed.delta, direct.delta))
    throw std::runtime_error(
        "aggregate_distribution: P1/P2 composition disagrees with the direct "
        "parameter expressions");
  return composed;
}

std::vector<double> aggregate_series(std::span<const double> x, std::size_t r) {
  if (r < 1) throw std::invalid_argument("aggregate_series: r >= 1");
  if (x.size() < r)
    throw std::invalid_argument("aggregate_series: series shorter than r");
  std::vector<double> out(x.size() - r + 1);
  for (std::size_t t = 0; t < out.size(); ++t) {
    double s = 0.0;  // fresh left-to-right window sum, no rolling drift
    for (std::size_t i = 0; i < r; ++i) s += x[t + i];
    out[t] = s;
  }
  return out;
}

}  // namespace stableagg
