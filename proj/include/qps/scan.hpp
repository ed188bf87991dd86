#pragma once

#include <functional>

#include "qps/series.hpp"

namespace qps {

/// Controls for grid-plus-golden-section minimization over angles.
struct ScanConfig {
  int grid_size = 4096;
  double refine_tol = 1e-10;
  double radius = 1.0;

  /// Throws ParameterError unless grid_size >= 16, 0 < refine_tol < 1 and
  /// 0 < radius <= 1.
  void validate() const;
};

struct ScanMinimum {
  double value = 0.0;
  double angle = 0.0;
};

/// Golden-section search for a minimum of `f` on [lo, hi], stopping when the
/// bracket is narrower than `tol`.
ScanMinimum golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                               double tol);

/// Minimum of `f` over a uniform grid followed by golden-section refinement
/// around the best cell and both neighbours.
///
/// With `periodic` set, the grid covers [lo, hi) and wraps; otherwise it
/// covers the closed interval [lo, hi] with `points` samples.
ScanMinimum grid_refined_min(const std::function<double(double)>& f, double lo, double hi,
                             int points, double tol, bool periodic);

/// Minimum of theta -> Re u(r e^{i theta}) over theta in [0, 2 pi).
///
/// Since u is a polynomial, its real part is harmonic and the minimum over
/// the closed disk |z| <= r lies on the circle |z| = r.
ScanMinimum boundary_min_re(const NormalizedSeries& u, const ScanConfig& scan);

}  // namespace qps
