#ifndef STABLEAGG_LQD_HPP
#define STABLEAGG_LQD_HPP

#include <span>
#include <string>

#include "stableagg/ma.hpp"
#include "stableagg/stable.hpp"

namespace stableagg {

/// A pair of quantile levels 0 < p1 < p2 < 1.
struct QuantileLevels {
  double p1;
  double p2;
};

void validate(const QuantileLevels& levels);

/// Shape of the log quantile difference as a function of ln r, determined by
/// the sign of g_alpha(theta).
enum class Shape { Convex, Linear, Concave };

const char* to_string(Shape s);

/// Conditions under which the closed-form aggregation formula for the log
/// quantile difference holds: a1 (symmetric innovations) or a2 (nonnegative
/// forward and backward partial sums of theta).
struct ConditionStatus {
  bool a1;
  bool a2;
  bool formula_valid;  ///< a1 || a2
};

/// Tolerance for classifying g_alpha(theta) as zero. Exact-zero cases
/// (alpha = 1 on sub-region 3, the D_2 curve) cancel analytically but leave
/// floating-point residue of order a few ulp; genuine nonzero values on test
/// grids are many orders larger.
inline constexpr double kShapeTol = 1e-12;

/// ln(xi_{p2} - xi_{p1}) for the given stable law.
double log_quantile_difference(const StableParams& p,
                               const QuantileLevels& levels);

/// The shape function
///   g_alpha(theta) = sum_{i<q} |fwd_i|^alpha - q|sum theta|^alpha
///                    + sum_{i>=1} |bwd_i|^alpha
/// where fwd_i/bwd_i are the forward/backward partial sums of theta.
/// Zero for iid (q = 0).
double g_alpha(std::span<const double> theta, double alpha);

/// Checks conditions a1 (innovation beta = 0) and a2 (all forward partial
/// sums theta_0+...+theta_i >= 0 and all backward partial sums
/// theta_i+...+theta_q >= 0).
ConditionStatus check_conditions(const MAModel& m);

/// Closed-form log quantile difference of the aggregate at level r:
///   alpha^{-1} ln(r |sum theta|^alpha + g_alpha(theta)) + zeta0.
/// Requires r >= q and formula validity (a1 or a2); allow_invalid computes
/// the right-hand side anyway for exploratory plots, clearly outside the
/// formula's guarantee. Real-valued r is accepted (the expression is
/// well-defined for all positive r); distributional meaning holds at
/// integers.
double lqd_formula(const MAModel& m, double r, const QuantileLevels& levels,
                   bool allow_invalid = false);

/// d zeta / d ln r = alpha^{-1} r|sum theta|^alpha /
///                   (r|sum theta|^alpha + g_alpha(theta)), for real r >= q.
/// Does not depend on the quantile levels.
double lqd_slope(const MAModel& m, double r);

/// d^2 zeta / (d ln r)^2; its sign equals sign(g_alpha(theta)).
double lqd_curvature(const MAModel& m, double r);

/// Convex / Linear / Concave according to the sign of g_alpha(theta) under
/// kShapeTol. Requires formula validity.
Shape classify_shape(const MAModel& m);

}  // namespace stableagg

#endif  // STABLEAGG_LQD_HPP
