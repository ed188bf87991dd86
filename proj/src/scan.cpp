#include "qps/scan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qps/errors.hpp"

namespace qps {

void ScanConfig::validate() const {
  if (grid_size < 16) {
    throw ParameterError("scan grid_size must be >= 16, got " + std::to_string(grid_size));
  }
  if (!(refine_tol > 0.0 && refine_tol < 1.0)) {
    throw ParameterError("scan refine_tol must lie in (0, 1)");
  }
  if (!(radius > 0.0 && radius <= 1.0)) {
    throw ParameterError("scan radius must lie in (0, 1]");
  }
}

ScanMinimum golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                               double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  const double mid = 0.5 * (a + b);
  const double fm = f(mid);
  ScanMinimum best{fm, mid};
  if (f1 < best.value) best = {f1, x1};
  if (f2 < best.value) best = {f2, x2};
  return best;
}

ScanMinimum grid_refined_min(const std::function<double(double)>& f, double lo, double hi,
                             int points, double tol, bool periodic) {
  const double step = periodic ? (hi - lo) / points : (hi - lo) / (points - 1);
  std::vector<double> values(static_cast<std::size_t>(points));
  int best = 0;
  for (int i = 0; i < points; ++i) {
    values[i] = f(lo + step * i);
    if (values[i] < values[best]) best = i;
  }
  ScanMinimum result{values[best], lo + step * best};

  double left = lo + step * (best - 1);
  double right = lo + step * (best + 1);
  if (!periodic) {
    left = std::max(left, lo);
    right = std::min(right, hi);
  }
  const ScanMinimum refined = golden_section_min(f, left, right, tol);
  if (refined.value < result.value) result = refined;

  if (periodic) {
    const double period = hi - lo;
    result.angle = lo + std::fmod(std::fmod(result.angle - lo, period) + period, period);
  }
  return result;
}

ScanMinimum boundary_min_re(const NormalizedSeries& u, const ScanConfig& scan) {
  scan.validate();
  if (u.order() == 1) return {1.0, 0.0};
  const double r = scan.radius;
  auto re_u = [&u, r](double theta) { return evaluate(u, std::polar(r, theta)).real(); };
  return grid_refined_min(re_u, 0.0, 2.0 * std::numbers::pi, scan.grid_size, scan.refine_tol,
                          true);
}

}  // namespace qps
