#ifndef STABLEAGG_VERIFY_HPP
#define STABLEAGG_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stableagg/lqd.hpp"
#include "stableagg/ma.hpp"

namespace stableagg {

/// Applies the MA filter to a given innovation sequence, returning
/// innovations.size() - q values of X_t. Exposed so tests can force
/// degenerate innovation paths.
std::vector<double> apply_ma_filter(const MAModel& m,
                                    std::span<const double> innovations);

/// n consecutive values of X_t built from n + q innovation draws.
/// Deterministic given seed.
std::vector<double> simulate_ma(const MAModel& m, std::size_t n,
                                std::uint64_t seed);

/// ln of the spread between the empirical p2- and p1-quantiles, using
/// linear interpolation between order statistics (the common type-7 rule).
/// Requires x.size() >= 100; errors if the estimated spread is not positive.
double empirical_lqd(std::span<const double> x, const QuantileLevels& levels);

/// Analytic vs. Monte Carlo comparison record.
struct VerificationReport {
  MAModel model;
  std::size_t r = 0;
  QuantileLevels levels{};
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double analytic_lqd = 0.0;   ///< via aggregate_distribution quantiles
  double empirical_lqd = 0.0;  ///< from the simulated, aggregated path
  /// Closed-form value when a1 or a2 holds; disengaged otherwise.
  std::optional<double> formula_lqd;
  double abs_error = 0.0;
  double mc_stderr_estimate = 0.0;
  double k = 4.0;
  bool pass = false;
};

/// Simulates an MA path of length n, aggregates at level r, and compares the
/// empirical log quantile difference with the analytic one. The stderr
/// estimate uses nonoverlapping batch means over the aggregated series
/// (50 batches, reduced if needed to keep batch length >= max(100,
/// 10*(r+q)) under the serial dependence of overlapping windows);
/// pass iff abs_error <= k * stderr. Requires r >= max(q, 1), n >= 10^4.
VerificationReport verify(const MAModel& m, std::size_t r,
                          const QuantileLevels& levels, std::size_t n,
                          std::uint64_t seed, double k = 4.0);

}  // namespace stableagg

#endif  // STABLEAGG_VERIFY_HPP
