#include "stableagg/region.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "stableagg/lqd.hpp"
#include "parallel.hpp"

namespace stableagg {

namespace {

constexpr double kRootMargin = 1e-10;

/// Invertibility for q >= 3 via the companion matrix of the reciprocal
/// polynomial z^q + theta1 z^{q-1} + ... + thetaq, whose roots are the
/// reciprocals of the MA polynomial's roots.
bool invertible_companion(std::span<const double> theta) {
  const std::size_t q = theta.size() - 1;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(q, q);
  for (std::size_t i = 0; i < q; ++i) companion(0, i) = -theta[i + 1];
  for (std::size_t i = 1; i < q; ++i) companion(i, i - 1) = 1.0;
  const Eigen::VectorXcd roots = companion.eigenvalues();
  for (Eigen::Index i = 0; i < roots.size(); ++i)
    if (std::abs(roots[i]) >= 1.0 / (1.0 + kRootMargin)) return false;
  return true;
}

double g2(double alpha, double t1, double t2) {
  const double theta[3] = {1.0, t1, t2};
  return g_alpha(theta, alpha);
}

bool inside_ma2_invertibility(double t1, double t2) {
  return t2 < 1.0 && t1 + t2 > -1.0 && t1 - t2 < 1.0;
}

}  // namespace

std::string to_string(const SubRegionLabel& label) {
  switch (label.kind) {
    case SubRegionKind::R1: return "R1";
    case SubRegionKind::R2: return "R2";
    case SubRegionKind::R3: return "R3";
    case SubRegionKind::R4: return "R4";
    case SubRegionKind::R5: return "R5";
    case SubRegionKind::Origin: return "Origin";
    case SubRegionKind::NotInvertible: return "NotInvertible";
    case SubRegionKind::Border:
      return "Border(" + std::to_string(label.border_a) + "," +
             std::to_string(label.border_b) + ")";
  }
  return "?";
}

const char* to_string(GSign s) {
  switch (s) {
    case GSign::Positive: return "Positive";
    case GSign::Zero: return "Zero";
    case GSign::Negative: return "Negative";
  }
  return "?";
}

bool is_invertible(std::span<const double> theta) {
  if (theta.empty() || theta[0] != 1.0)
    throw std::invalid_argument("is_invertible: theta must start with 1");
  // Trim trailing zero coefficients; they lower the polynomial degree.
  std::size_t q = theta.size() - 1;
  while (q > 0 && theta[q] == 0.0) --q;
  if (q == 0) return true;
  if (q == 1) return std::fabs(theta[1]) < 1.0;
  if (q == 2)
    return inside_ma2_invertibility(theta[1], theta[2]);
  return invertible_companion(theta.subspan(0, q + 1));
}

SubRegionLabel ma2_subregion(double theta1, double theta2) {
  const double s = theta1 + theta2;
  if (std::fabs(theta1) <= kBorderTol && std::fabs(theta2) <= kBorderTol)
    return {SubRegionKind::Origin};
  if (!inside_ma2_invertibility(theta1, theta2))
    return {SubRegionKind::NotInvertible};

  if (std::fabs(theta1 + 1.0) <= kBorderTol && theta2 > kBorderTol)
    return {SubRegionKind::Border, 1, 2};
  if (std::fabs(theta2) <= kBorderTol) {
    // The theta2 = 0 axis is the set of invertible MA(1) processes.
    if (theta1 < 0.0) return {SubRegionKind::Border, 2, 4};
    return {SubRegionKind::Border, 3, 5};
  }
  if (std::fabs(s) <= kBorderTol) {
    if (theta2 > 0.0) return {SubRegionKind::Border, 2, 3};
    return {SubRegionKind::Border, 4, 5};
  }

  if (theta1 < -1.0) return {SubRegionKind::R1};
  if (theta2 > 0.0) return s < 0.0 ? SubRegionLabel{SubRegionKind::R2}
                                   : SubRegionLabel{SubRegionKind::R3};
  return s < 0.0 ? SubRegionLabel{SubRegionKind::R4}
                 : SubRegionLabel{SubRegionKind::R5};
}

GSign classify_g_sign(std::span<const double> theta, double alpha) {
  const double g = g_alpha(theta, alpha);
  if (g > kShapeTol) return GSign::Positive;
  if (g < -kShapeTol) return GSign::Negative;
  return GSign::Zero;
}

std::vector<RasterCell> region_raster(double alpha, const RasterSpec& spec) {
  if (!(alpha > 0.0) || !(alpha <= 2.0))
    throw std::invalid_argument("region_raster: alpha must be in (0, 2]");
  if (spec.n1 < 2 || spec.n2 < 2 || !(spec.t1_max > spec.t1_min) ||
      !(spec.t2_max > spec.t2_min))
    throw std::invalid_argument("region_raster: degenerate grid");

  const double w1 = (spec.t1_max - spec.t1_min) / static_cast<double>(spec.n1);
  const double w2 = (spec.t2_max - spec.t2_min) / static_cast<double>(spec.n2);
  std::vector<RasterCell> cells(spec.n1 * spec.n2);
  detail::parallel_for(spec.n2, [&](std::size_t j) {
    const double t2 = spec.t2_min + (static_cast<double>(j) + 0.5) * w2;
    for (std::size_t i = 0; i < spec.n1; ++i) {
      const double t1 = spec.t1_min + (static_cast<double>(i) + 0.5) * w1;
      RasterCell& cell = cells[j * spec.n1 + i];
      cell.theta1 = t1;
      cell.theta2 = t2;
      cell.region = ma2_subregion(t1, t2);
      cell.g_sign = cell.region.kind == SubRegionKind::NotInvertible
                        ? GSign::Zero
                        : classify_g_sign(std::array{1.0, t1, t2}, alpha);
    }
  });
  return cells;
}

std::vector<std::array<double, 2>> trace_d_alpha(double alpha,
                                                 std::size_t scanlines) {
  if (!(alpha > 1.0) || !(alpha <= 2.0))
    throw std::invalid_argument("trace_d_alpha: alpha must be in (1, 2]");
  if (scanlines < 2)
    throw std::invalid_argument("trace_d_alpha: need at least 2 scanlines");

  constexpr double kGTol = 1e-10;
  constexpr int kSubdiv = 128;

  std::vector<std::vector<std::array<double, 2>>> rows(scanlines);
  detail::parallel_for(scanlines, [&](std::size_t k) {
    const double t1 =
        -2.0 + 4.0 * (static_cast<double>(k) + 1.0) / (static_cast<double>(scanlines) + 1.0);
    const double lo = std::max(-1.0 - t1, t1 - 1.0);
    const double hi = 1.0;
    if (!(hi > lo)) return;
    const double inset = 1e-9 * (hi - lo);
    double prev_t2 = lo + inset;
    double prev_g = g2(alpha, t1, prev_t2);
    for (int s = 1; s <= kSubdiv; ++s) {
      const double t2 = lo + inset +
                        (hi - lo - 2.0 * inset) * static_cast<double>(s) /
                            static_cast<double>(kSubdiv);
      const double g = g2(alpha, t1, t2);
      if (prev_g == 0.0) {
        rows[k].push_back({t1, prev_t2});
      } else if ((prev_g < 0.0) != (g < 0.0) && g != 0.0) {
        double a = prev_t2, b = t2, ga = prev_g;
        for (int it = 0; it < 200; ++it) {
          const double mid = 0.5 * (a + b);
          const double gm = g2(alpha, t1, mid);
          if (std::fabs(gm) <= kGTol && b - a <= 1e-12) break;
          if ((gm < 0.0) == (ga < 0.0)) {
            a = mid;
            ga = gm;
          } else {
            b = mid;
          }
        }
        const double root = 0.5 * (a + b);
        if (std::fabs(g2(alpha, t1, root)) <= kGTol)
          rows[k].push_back({t1, root});
      }
      prev_t2 = t2;
      prev_g = g;
    }
  });

  std::vector<std::array<double, 2>> points;
  // Known members of D_alpha for every 1 < alpha <= 2; (-1, 1) sits on the
  // boundary of the invertibility region.
  points.push_back({0.0, 0.0});
  points.push_back({-1.0, 1.0});
  for (auto& row : rows)
    points.insert(points.end(), row.begin(), row.end());
  return points;
}

}  // namespace stableagg
