#ifndef STABLEAGG_REGION_HPP
#define STABLEAGG_REGION_HPP

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace stableagg {

/// Location of (theta1, theta2) within the MA(2) invertibility-region
/// taxonomy: five open sub-regions, the borders between them, the origin
/// (iid point), or outside/on the boundary of the invertibility region.
enum class SubRegionKind {
  R1,
  R2,
  R3,
  R4,
  R5,
  Border,
  Origin,
  NotInvertible,
};

struct SubRegionLabel {
  SubRegionKind kind;
  /// Adjacent sub-regions when kind == Border, with border_a < border_b.
  int border_a = 0;
  int border_b = 0;

  bool operator==(const SubRegionLabel&) const = default;
};

std::string to_string(const SubRegionLabel& label);

/// Sign class of g_alpha(theta) under the shared zero tolerance.
enum class GSign { Positive, Zero, Negative };

const char* to_string(GSign s);

/// Tolerance under which a point counts as lying on a border's defining
/// equality. The sub-regions are open sets; exact-equality tests on floats
/// need a band.
inline constexpr double kBorderTol = 1e-12;

/// True iff every root of 1 + theta1 z + ... + thetaq z^q has modulus > 1.
/// Closed-form inequalities for q <= 2; companion-matrix eigenvalue moduli
/// (with a 1e-10 margin) for higher orders. theta includes theta[0] = 1;
/// q = 0 returns true.
bool is_invertible(std::span<const double> theta);

/// Classifies a point of the MA(2) parameter plane. The theta2 = 0 axis
/// segments are the invertible MA(1) processes and map to the (2,4) and
/// (3,5) borders.
SubRegionLabel ma2_subregion(double theta1, double theta2);

/// Sign of g_alpha(theta) under kShapeTol.
GSign classify_g_sign(std::span<const double> theta, double alpha);

/// Rectangular grid specification; cells are classified at their centers.
struct RasterSpec {
  double t1_min = -2.0;
  double t1_max = 2.0;
  double t2_min = -1.0;
  double t2_max = 1.0;
  std::size_t n1 = 0;  ///< cells along theta1, >= 2
  std::size_t n2 = 0;  ///< cells along theta2, >= 2
};

struct RasterCell {
  double theta1;
  double theta2;
  SubRegionLabel region;
  GSign g_sign;  ///< meaningful only when region.kind != NotInvertible
};

/// Per-cell sub-region and g-sign classification over the grid, row-major
/// with theta1 varying fastest. Non-invertible cells are marked by their
/// region label. Deterministic regardless of thread count.
std::vector<RasterCell> region_raster(double alpha, const RasterSpec& spec);

/// Numerical trace of the zero set D_alpha = {theta : g_alpha(theta) = 0}
/// inside the MA(2) invertibility region, for 1 < alpha <= 2: vertical
/// scanlines in theta1 with bisection in theta2, plus the two known anchor
/// points (0,0) and (-1,1). Every returned point satisfies
/// |g_alpha(theta)| <= 1e-10.
std::vector<std::array<double, 2>> trace_d_alpha(double alpha,
                                                 std::size_t scanlines);

}  // namespace stableagg

#endif  // STABLEAGG_REGION_HPP
