#include "stableagg/stable.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/erf.hpp>

#include "stableagg/rng.hpp"

namespace stableagg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

using Quad = boost::math::quadrature::gauss_kronrod<double, 31>;
constexpr unsigned kQuadDepth = 13;
constexpr double kQuadTol = 1e-13;

double safe_log(double x) { return std::log(std::max(x, 1e-300)); }

/// ln V(theta) for the alpha != 1 integral representation of the standard
/// S0 law. The three cos/sin factors are combined in log space; the lone
/// ln cos(theta) term has coefficient 1/(alpha-1) after cancellation.
struct LogVNe1 {
  double alpha;
  double at0;  // alpha * theta0 = atan(beta * tan(pi*alpha/2))
  double ln_cos_at0;

  double operator()(double th) const {
    const double k = 1.0 / (alpha - 1.0);
    const double s = std::sin(at0 + alpha * th);
    const double c2 = std::cos(at0 + (alpha - 1.0) * th);
    return k * ln_cos_at0 - alpha * k * safe_log(s) +
           k * safe_log(std::cos(th)) + safe_log(c2);
  }
};

/// ln V(theta) for the alpha = 1, beta > 0 representation.
struct LogVEq1 {
  double beta;

  double operator()(double th) const {
    const double u = kHalfPi + beta * th;
    return std::log(2.0 / kPi) + safe_log(u) - safe_log(std::cos(th)) +
           u * std::tan(th) / beta;
  }
};

/// Integrand exp(-exp(ln_s + lnV(theta))), always in [0, 1].
template <typename LogV>
double band_integrand(const LogV& lnv, double ln_s, double th) {
  const double e = ln_s + lnv(th);
  if (e > 690.0) return 0.0;
  return std::exp(-std::exp(e));
}

/// Locates the point where the integrand passes through exp(-1), i.e. where
/// ln_s + lnV = 0. The integrand is a smooth 0-to-1 transition that can be
/// nearly a step; splitting the interval there keeps the adaptive quadrature
/// honest. Returns NaN when there is no sign change.
template <typename LogV>
double find_transition(const LogV& lnv, double ln_s, double lo, double hi) {
  const double inset = 1e-10 * (hi - lo);
  double a = lo + inset;
  double b = hi - inset;
  double fa = ln_s + lnv(a);
  double fb = ln_s + lnv(b);
  if (std::isnan(fa) || std::isnan(fb)) return std::numeric_limits<double>::quiet_NaN();
  if ((fa > 0.0) == (fb > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  for (int i = 0; i < 200 && b - a > 1e-15; ++i) {
    const double m = 0.5 * (a + b);
    const double fm = ln_s + lnv(m);
    if ((fm > 0.0) == (fa > 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

template <typename LogV>
double integrate_band(const LogV& lnv, double ln_s, double lo, double hi) {
  if (!(hi > lo)) return 0.0;
  const auto f = [&](double th) { return band_integrand(lnv, ln_s, th); };
  const double split = find_transition(lnv, ln_s, lo, hi);
  double err = 0.0;
  if (std::isnan(split) || split <= lo || split >= hi) {
    return Quad::integrate(f, lo, hi, kQuadDepth, kQuadTol, &err);
  }
  return Quad::integrate(f, lo, split, kQuadDepth, kQuadTol, &err) +
         Quad::integrate(f, split, hi, kQuadDepth, kQuadTol, &err);
}

/// CDF of the standard S0(alpha, beta) law, alpha != 1.
double standard_cdf_ne1(double alpha, double beta, double z) {
  const double t = std::tan(kHalfPi * alpha);
  const double zeta = -beta * t;
  const double at0 = std::atan(beta * t);
  const double theta0 = at0 / alpha;
  if (z == zeta) return (kHalfPi - theta0) / kPi;
  if (z < zeta) return 1.0 - standard_cdf_ne1(alpha, -beta, -z);

  const double ln_s = alpha / (alpha - 1.0) * std::log(z - zeta);
  const LogVNe1 lnv{alpha, at0, std::log(std::cos(at0))};
  const double integral = integrate_band(lnv, ln_s, -theta0, kHalfPi);
  const double value = alpha < 1.0
                           ? (kHalfPi - theta0) / kPi + integral / kPi
                           : 1.0 - integral / kPi;
  return std::clamp(value, 0.0, 1.0);
}

/// CDF of the standard S0(1, beta) law. beta = 0 is the Cauchy closed form.
double standard_cdf_eq1(double beta, double z) {
  if (beta == 0.0) return 0.5 + std::atan(z) / kPi;
  if (beta < 0.0) return 1.0 - standard_cdf_eq1(-beta, -z);
  const double ln_s = -kHalfPi * z / beta;
  const LogVEq1 lnv{beta};
  const double integral = integrate_band(lnv, ln_s, -kHalfPi, kHalfPi);
  return std::clamp(integral / kPi, 0.0, 1.0);
}

double standard_cdf(double alpha, double beta, double z) {
  if (std::isinf(z)) return z > 0.0 ? 1.0 : 0.0;
  if (alpha_is_one(alpha)) return standard_cdf_eq1(beta, z);
  return standard_cdf_ne1(alpha, beta, z);
}

/// Inverts standard_cdf by bracketing: the bracket starts from Gaussian and
/// Cauchy envelope quantiles, is widened geometrically until it straddles p,
/// then shrinks by bisection alternated with a secant step kept inside the
/// bracket.
double standard_quantile(double alpha, double beta, double p) {
  const double cauchy = std::tan(kPi * (p - 0.5));
  const double gauss = 2.0 * boost::math::erf_inv(2.0 * p - 1.0);
  double hi = std::max({4.0, 2.0 * std::fabs(cauchy), 2.0 * std::fabs(gauss)});
  double lo = -hi;
  double flo = standard_cdf(alpha, beta, lo);
  double fhi = standard_cdf(alpha, beta, hi);
  for (int i = 0; i < 2000 && flo > p; ++i) {
    lo *= 2.0;
    flo = standard_cdf(alpha, beta, lo);
  }
  for (int i = 0; i < 2000 && fhi < p; ++i) {
    hi *= 2.0;
    fhi = standard_cdf(alpha, beta, hi);
  }
  if (flo > p || fhi < p)
    throw std::runtime_error("stable_quantile: failed to bracket quantile");

  constexpr double kFTol = 1e-12;
  double best = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    double cand;
    if (iter % 2 == 0 && fhi > flo) {
      cand = lo + (p - flo) * (hi - lo) / (fhi - flo);
      const double margin = 1e-3 * (hi - lo);
      cand = std::clamp(cand, lo + margin, hi - margin);
    } else {
      cand = 0.5 * (lo + hi);
    }
    const double f = standard_cdf(alpha, beta, cand);
    best = cand;
    if (std::fabs(f - p) <= kFTol) break;
    if (f < p) {
      lo = cand;
      flo = f;
    } else {
      hi = cand;
      fhi = f;
    }
    if (hi - lo <= 1e-13 * std::max(1.0, std::fabs(cand))) {
      best = 0.5 * (lo + hi);
      break;
    }
  }
  return best;
}

}  // namespace

void validate(const StableParams& p) {
  if (!(p.alpha > 0.0) || !(p.alpha <= 2.0) || !std::isfinite(p.alpha))
    throw std::invalid_argument("StableParams: alpha must be in (0, 2]");
  if (!(p.beta >= -1.0) || !(p.beta <= 1.0))
    throw std::invalid_argument("StableParams: beta must be in [-1, 1]");
  if (!(p.gamma > 0.0) || !std::isfinite(p.gamma))
    throw std::invalid_argument("StableParams: gamma must be positive");
  if (!std::isfinite(p.delta))
    throw std::invalid_argument("StableParams: delta must be finite");
}

StableParams linear_transform(const StableParams& p, double a, double b) {
  validate(p);
  if (a == 0.0)
    throw std::invalid_argument(
        "linear_transform: a must be nonzero (degenerate distribution)");
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("linear_transform: a, b must be finite");
  return {p.alpha, sign(a) * p.beta, std::fabs(a) * p.gamma, a * p.delta + b};
}

StableParams sum_independent(std::span<const StableParams> parts) {
  if (parts.empty())
    throw std::invalid_argument("sum_independent: empty part list");
  const double alpha = parts[0].alpha;
  for (const auto& p : parts) {
    validate(p);
    if (p.alpha != alpha)
      throw std::invalid_argument(
          "sum_independent: parts must share one stability index");
  }

  // Compensated (Kahan) accumulation in ascending index order for
  // cross-platform reproducibility at tight tolerances.
  double gamma_pow = 0.0, gp_c = 0.0;
  double beta_num = 0.0, bn_c = 0.0;
  double delta_sum = 0.0, ds_c = 0.0;
  auto add = [](double& sum, double& comp, double term) {
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  };
  for (const auto& p : parts) {
    const double gp = std::pow(p.gamma, alpha);
    add(gamma_pow, gp_c, gp);
    add(beta_num, bn_c, p.beta * gp);
    add(delta_sum, ds_c, p.delta);
  }
  const double gamma = std::pow(gamma_pow, 1.0 / alpha);
  const double beta = beta_num / gamma_pow;

  double delta;
  if (alpha_is_one(alpha)) {
    double corr = 0.0, cc = 0.0;
    for (const auto& p : parts) add(corr, cc, p.beta * p.gamma * std::log(p.gamma));
    delta = delta_sum + 2.0 / kPi * (beta * gamma * std::log(gamma) - corr);
  } else {
    double corr = 0.0, cc = 0.0;
    for (const auto& p : parts) add(corr, cc, p.beta * p.gamma);
    delta = delta_sum + std::tan(kHalfPi * alpha) * (beta * gamma - corr);
  }
  return {alpha, std::clamp(beta, -1.0, 1.0), gamma, delta};
}

double stable_cdf(const StableParams& p, double x) {
  validate(p);
  if (std::isnan(x)) throw std::invalid_argument("stable_cdf: x is NaN");
  if (std::isinf(x)) return x > 0.0 ? 1.0 : 0.0;
  return standard_cdf(p.alpha, p.beta, (x - p.delta) / p.gamma);
}

double stable_quantile(const StableParams& p, double prob) {
  validate(p);
  if (!(prob > 0.0) || !(prob < 1.0))
    throw std::invalid_argument("stable_quantile: p must be in (0, 1)");
  return p.gamma * standard_quantile(p.alpha, p.beta, prob) + p.delta;
}

std::vector<double> sample_stable(const StableParams& p, std::size_t n,
                                  std::uint64_t seed, std::uint64_t stream) {
  validate(p);
  if (n < 1) throw std::invalid_argument("sample_stable: n must be >= 1");
  Rng rng(seed, stream);
  std::vector<double> out(n);

  if (alpha_is_one(p.alpha)) {
    const double beta = p.beta;
    for (auto& x : out) {
      const double th = kPi * (rng.uniform01() - 0.5);
      const double w = rng.exponential();
      double z;
      if (beta == 0.0) {
        z = std::tan(th);
      } else {
        const double u = kHalfPi + beta * th;
        z = 2.0 / kPi *
            (u * std::tan(th) - beta * std::log(kHalfPi * w * std::cos(th) / u));
      }
      x = p.gamma * z + p.delta;
    }
    return out;
  }

  const double alpha = p.alpha;
  const double t = std::tan(kHalfPi * alpha);
  const double at0 = std::atan(p.beta * t);
  const double cos_at0 = std::cos(at0);
  const double inv_alpha = 1.0 / alpha;
  const double exp2 = (1.0 - alpha) / alpha;
  const double shift = p.beta * t;  // standard S1 -> standard S0
  for (auto& x : out) {
    const double th = kPi * (rng.uniform01() - 0.5);
    const double w = rng.exponential();
    const double z1 = std::sin(at0 + alpha * th) /
                          std::pow(cos_at0 * std::cos(th), inv_alpha) *
                      std::pow(std::cos(at0 + (alpha - 1.0) * th) / w, exp2);
    x = p.gamma * (z1 - shift) + p.delta;
  }
  return out;
}

}  // namespace stableagg
