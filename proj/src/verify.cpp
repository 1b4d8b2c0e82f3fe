#include "stableagg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stableagg {

std::vector<double> apply_ma_filter(const MAModel& m,
                                    std::span<const double> innovations) {
  validate(m);
  const std::size_t q = m.order();
  if (innovations.size() <= q)
    throw std::invalid_argument("apply_ma_filter: need more than q innovations");
  std::vector<double> x(innovations.size() - q);
  for (std::size_t t = 0; t < x.size(); ++t) {
    double s = 0.0;
    for (std::size_t j = 0; j <= q; ++j) s += m.theta[j] * innovations[t + q - j];
    x[t] = s;
  }
  return x;
}

std::vector<double> simulate_ma(const MAModel& m, std::size_t n,
                                std::uint64_t seed) {
  validate(m);
  if (n < 1) throw std::invalid_argument("simulate_ma: n must be >= 1");
  const std::vector<double> innov =
      sample_stable(m.innovation, n + m.order(), seed);
  return apply_ma_filter(m, innov);
}

namespace {

/// Type-7 empirical quantile: linear interpolation between order statistics
/// of the sorted sample.
double quantile_type7(const std::vector<double>& sorted, double p) {
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const std::size_t lo = static_cast<std::size_t>(h);
  const double frac = h - static_cast<double>(lo);
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double lqd_of_sorted(const std::vector<double>& sorted,
                     const QuantileLevels& levels) {
  const double spread =
      quantile_type7(sorted, levels.p2) - quantile_type7(sorted, levels.p1);
  if (!(spread > 0.0))
    throw std::domain_error(
        "empirical_lqd: estimated quantile spread is not positive "
        "(sample too small or levels too close)");
  return std::log(spread);
}

}  // namespace

double empirical_lqd(std::span<const double> x, const QuantileLevels& levels) {
  validate(levels);
  if (x.size() < 100)
    throw std::invalid_argument("empirical_lqd: need at least 100 samples");
  std::vector<double> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  return lqd_of_sorted(sorted, levels);
}

VerificationReport verify(const MAModel& m, std::size_t r,
                          const QuantileLevels& levels, std::size_t n,
                          std::uint64_t seed, double k) {
  validate(m);
  validate(levels);
  const std::size_t q = m.order();
  if (r < std::max<std::size_t>(q, 1))
    throw std::invalid_argument("verify: r must be >= max(q, 1)");
  if (n < 10000) throw std::invalid_argument("verify: n must be >= 10^4");
  if (!(k > 0.0)) throw std::invalid_argument("verify: k must be positive");

  VerificationReport rep;
  rep.model = m;
  rep.r = r;
  rep.levels = levels;
  rep.n = n;
  rep.seed = seed;
  rep.k = k;

  const std::vector<double> path = simulate_ma(m, n, seed);
  const std::vector<double> agg = aggregate_series(path, r);

  rep.empirical_lqd = empirical_lqd(agg, levels);
  rep.analytic_lqd =
      log_quantile_difference(aggregate_distribution(m, r), levels);
  if (check_conditions(m).formula_valid)
    rep.formula_lqd = lqd_formula(m, static_cast<double>(r), levels);
  rep.abs_error = std::fabs(rep.empirical_lqd - rep.analytic_lqd);

  // Nonoverlapping batch means over the (serially dependent) aggregated
  // series. Batches must span many dependence lengths r+q; the count is
  // reduced below 50 only when that constraint binds.
  const std::size_t min_len = std::max<std::size_t>(100, 10 * (r + q));
  std::size_t batches = std::min<std::size_t>(50, agg.size() / min_len);
  if (batches < 8)
    throw std::invalid_argument("verify: n too small for batch-means stderr");
  const std::size_t len = agg.size() / batches;
  double mean = 0.0;
  std::vector<double> batch_lqd(batches);
  for (std::size_t b = 0; b < batches; ++b) {
    std::vector<double> chunk(agg.begin() + static_cast<std::ptrdiff_t>(b * len),
                              agg.begin() + static_cast<std::ptrdiff_t>((b + 1) * len));
    std::sort(chunk.begin(), chunk.end());
    batch_lqd[b] = lqd_of_sorted(chunk, levels);
    mean += batch_lqd[b];
  }
  mean /= static_cast<double>(batches);
  double ss = 0.0;
  for (double v : batch_lqd) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(batches - 1));
  rep.mc_stderr_estimate = sd / std::sqrt(static_cast<double>(batches));

  rep.pass = rep.abs_error <= k * rep.mc_stderr_estimate;
  return rep;
}

}  // namespace stableagg
