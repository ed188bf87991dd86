#pragma once

#include <vector>

#include "qps/classes.hpp"
#include "qps/random.hpp"
#include "qps/scan.hpp"
#include "qps/series.hpp"

namespace qps {

// ---------------------------------------------------------------------------
// Nonnegative cosine sums
// ---------------------------------------------------------------------------

struct CosineSumQuery {
  double gamma = 0.0;
  int l = 1;

  /// Throws ParameterError unless gamma > -1 and l >= 1.
  void validate() const;
};

/// 1/(1+gamma) + sum_{k=1}^{l} cos(k theta)/(k + gamma).
double cosine_sum(double theta, const CosineSumQuery& query);

struct CosineSumMin {
  double value = 0.0;
  double theta = 0.0;
  int l = 1;
};

/// Minimum of cosine_sum over theta in [0, pi] and 1 <= l <= l_max.
///
/// Every l shares one theta grid of scan.grid_size points (partial sums are
/// accumulated in l); the best cell of each l is then refined by golden
/// section. Ties resolve to the smaller theta, then the smaller l.
CosineSumMin cosine_sum_min(double gamma, int l_max, const ScanConfig& scan);

/// Values of cosine_sum_min below this are treated as a genuine sign change.
inline constexpr double kCosineSignTol = 1e-13;

struct GasperEstimate {
  double constant = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int critical_l = 0;
  double critical_theta = 0.0;
  double critical_value = 0.0;
  int iterations = 0;
};

/// Bisection on gamma for the largest value with cosine_sum_min >= 0.
///
/// Throws BracketError when [lo, hi] does not straddle a sign change, e.g.
/// for l_max too small to exhibit the negative dip.
GasperEstimate estimate_best_constant(int l_max, double tol, const ScanConfig& scan,
                                      double lo = 4.0, double hi = 5.0);

/// Minimum over |z| = scan.radius of Re sum_{k=1}^{l} z^k/(k + gamma).
ScanMinimum real_part_min(double gamma, int l, const ScanConfig& scan);

// ---------------------------------------------------------------------------
// Convex hulls and the convolution hull property
// ---------------------------------------------------------------------------

/// Planar points are stored as complex numbers (x = real, y = imag).
using Point = Complex;

/// Monotone-chain hull in counterclockwise order. Collinear input gives the
/// two extreme points, coincident input a single point. Throws
/// ConstructionError on empty input.
std::vector<Point> convex_hull(std::vector<Point> points);

/// Signed distance of `pt` outside a hull from convex_hull(): positive
/// outside, nonpositive inside. For polygons this is the largest signed
/// distance to the supporting line of any edge.
double hull_signed_distance(const std::vector<Point>& hull, Point pt);

enum class HullStatus {
  checked,  ///< Re p >= 1/2 - tol held on the scan circle
  vacuous,  ///< precondition failed; the result carries no guarantee
};

struct HullSampling {
  int radii = 64;
  int angles = 256;
  double max_radius = 0.999;
  double tol = 1e-6;
};

struct HullReport {
  HullStatus status = HullStatus::checked;
  double p_min_re = 0.0;
  double max_outside = 0.0;
  int hull_vertices = 0;
  int samples = 0;
  double tol = 0.0;
  bool pass = false;
};

/// p = (1 + h)/2 for the Fejer-truncated mixture h, so Re p >= 1/2 on the
/// closed disk.
NormalizedSeries half_plane_kernel(const KernelSpec& spec, int order);

/// Polynomial with coefficient of z^j uniform in the disk of radius 1/j.
NormalizedSeries random_analytic(Rng& rng, int order);

/// Samples (p * q)(z) over a polar grid of the disk and measures how far the
/// values fall outside the hull of q on |z| = scan.radius.
HullReport hull_membership_check(const NormalizedSeries& p, const NormalizedSeries& q,
                                 const ScanConfig& scan, const HullSampling& sampling = {});

}  // namespace qps
