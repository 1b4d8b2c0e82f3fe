#ifndef STABLEAGG_MA_HPP
#define STABLEAGG_MA_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "stableagg/stable.hpp"

namespace stableagg {

/// Moving-average model X_t = sum_{j=0}^{q} theta[j] e_{t-j} with stable
/// innovations. theta stores the full q+1 vector including theta[0] = 1;
/// q = 0 is the iid case.
struct MAModel {
  std::vector<double> theta;
  StableParams innovation;

  std::size_t order() const { return theta.empty() ? 0 : theta.size() - 1; }
};

/// Throws std::invalid_argument unless theta is non-empty with theta[0] == 1
/// exactly, all entries finite, and the innovation parameters are valid.
void validate(const MAModel& m);

/// Weights c_j expressing the flow aggregate S_t^(r) = sum_{i=0}^{r-1} X_{t-i}
/// as a linear filter of the innovations: S_t^(r) = sum_j c[j] e_{t-j}.
struct AggCoefficients {
  std::size_t r;          ///< aggregation level
  std::vector<double> c;  ///< length r + q
  bool theorem_range;     ///< r >= q: the closed-form branch expressions apply

  std::size_t order() const { return c.size() - r; }
};

/// Filter coefficients of the aggregated process. For r >= q these follow
/// the three-branch closed form (prefix sums / full sum / suffix sums); for
/// 1 <= r < q they are computed from the defining double sum, and
/// theorem_range is false so quantile-formula layers can refuse.
AggCoefficients aggregation_coefficients(const MAModel& m, std::size_t r);

/// S0 parameters of the aggregated process S_t^(r), obtained by pushing each
/// c_j through linear_transform and combining with sum_independent. A direct
/// evaluation of the closed-form gamma/beta/delta expressions is used as an
/// internal cross-check.
StableParams aggregate_distribution(const MAModel& m, std::size_t r);

/// Rolling sums of r consecutive values; output length = x.size() - r + 1.
/// Requires x.size() >= r.
std::vector<double> aggregate_series(std::span<const double> x, std::size_t r);

}  // namespace stableagg

#endif  // STABLEAGG_MA_HPP
