#include "qps/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qps/errors.hpp"

namespace qps {

void CosineSumQuery::validate() const {
  if (!(gamma > -1.0)) throw ParameterError("gamma must be > -1");
  if (l < 1) throw ParameterError("l must be >= 1, got " + std::to_string(l));
}

double cosine_sum(double theta, const CosineSumQuery& query) {
  query.validate();
  double sum = 1.0 / (1.0 + query.gamma);
  for (int k = 1; k <= query.l; ++k) sum += std::cos(k * theta) / (k + query.gamma);
  return sum;
}

namespace {

bool better(double value, double theta, int l, const CosineSumMin& best) {
  if (value != best.value) return value < best.value;
  if (theta != best.theta) return theta < best.theta;
  return l < best.l;
}

}  // namespace

CosineSumMin cosine_sum_min(double gamma, int l_max, const ScanConfig& scan) {
  CosineSumQuery{gamma, l_max}.validate();
  scan.validate();
  const int points = scan.grid_size;
  const double step = std::numbers::pi / (points - 1);

  // Best grid cell of every l.
  std::vector<double> cell_value(static_cast<std::size_t>(l_max),
                                 std::numeric_limits<double>::infinity());
  std::vector<int> cell_index(static_cast<std::size_t>(l_max), 0);
  for (int i = 0; i < points; ++i) {
    const double theta = step * i;
    double sum = 1.0 / (1.0 + gamma);
    for (int k = 1; k <= l_max; ++k) {
      sum += std::cos(k * theta) / (k + gamma);
      if (sum < cell_value[k - 1]) {
        cell_value[k - 1] = sum;
        cell_index[k - 1] = i;
      }
    }
  }

  CosineSumMin best{std::numeric_limits<double>::infinity(), 0.0, 1};
  for (int l = 1; l <= l_max; ++l) {
    const int i = cell_index[l - 1];
    if (better(cell_value[l - 1], step * i, l, best)) best = {cell_value[l - 1], step * i, l};

    const CosineSumQuery query{gamma, l};
    const double left = std::max(0.0, step * (i - 1));
    const double right = std::min(std::numbers::pi, step * (i + 1));
    const ScanMinimum refined = golden_section_min(
        [&query](double t) { return cosine_sum(t, query); }, left, right, scan.refine_tol);
    if (better(refined.value, refined.angle, l, best)) best = {refined.value, refined.angle, l};
  }
  return best;
}

GasperEstimate estimate_best_constant(int l_max, double tol, const ScanConfig& scan, double lo,
                                      double hi) {
  if (!(tol > 0.0)) throw ParameterError("tol must be > 0");
  if (!(lo < hi)) throw ParameterError("bracket must satisfy lo < hi");

  auto negative = [&](const CosineSumMin& m) { return m.value < -kCosineSignTol; };
  const CosineSumMin at_lo = cosine_sum_min(lo, l_max, scan);
  CosineSumMin at_hi = cosine_sum_min(hi, l_max, scan);
  if (negative(at_lo) || !negative(at_hi)) {
    throw BracketError("no sign change of the minimal cosine sum on [" + std::to_string(lo) +
                       ", " + std::to_string(hi) + "] with l_max = " + std::to_string(l_max) +
                       " (min at lo = " + std::to_string(at_lo.value) +
                       ", min at hi = " + std::to_string(at_hi.value) + ")");
  }

  GasperEstimate estimate;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const CosineSumMin at_mid = cosine_sum_min(mid, l_max, scan);
    if (negative(at_mid)) {
      hi = mid;
      at_hi = at_mid;
    } else {
      lo = mid;
    }
    ++estimate.iterations;
  }
  estimate.lo = lo;
  estimate.hi = hi;
  estimate.constant = 0.5 * (lo + hi);
  estimate.critical_l = at_hi.l;
  estimate.critical_theta = at_hi.theta;
  estimate.critical_value = at_hi.value;
  return estimate;
}

ScanMinimum real_part_min(double gamma, int l, const ScanConfig& scan) {
  CosineSumQuery{gamma, l}.validate();
  std::vector<Complex> coeffs(static_cast<std::size_t>(l));
  for (int k = 1; k <= l; ++k) coeffs[k - 1] = 1.0 / (k + gamma);
  ScanMinimum found = boundary_min_re(NormalizedSeries(std::move(coeffs), l + 1), scan);
  found.value -= 1.0;
  return found;
}

namespace {

double cross(Point o, Point a, Point b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

double segment_distance(Point a, Point b, Point pt) {
  const Point ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(pt - a);
  const double t = std::clamp(((pt - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(pt - (a + t * ab));
}

}  // namespace

std::vector<Point> convex_hull(std::vector<Point> points) {
  if (points.empty()) throw ConstructionError("convex_hull: empty point set");
  std::sort(points.begin(), points.end(), [](Point a, Point b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;

  std::vector<Point> hull(2 * points.size());
  std::size_t k = 0;
  for (const Point& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

double hull_signed_distance(const std::vector<Point>& hull, Point pt) {
  if (hull.empty()) throw ConstructionError("hull_signed_distance: empty hull");
  if (hull.size() == 1) return std::abs(pt - hull[0]);
  if (hull.size() == 2) return segment_distance(hull[0], hull[1], pt);

  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point a = hull[i];
    const Point b = hull[(i + 1) % hull.size()];
    worst = std::max(worst, -cross(a, b, pt) / std::abs(b - a));
  }
  return worst;
}

NormalizedSeries half_plane_kernel(const KernelSpec& spec, int order) {
  return scale_coefficients(caratheodory_mixture(spec, order, Truncation::fejer),
                            [](int) { return 0.5; });
}

NormalizedSeries random_analytic(Rng& rng, int order) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(std::max(order - 1, 0)));
  for (std::size_t j = 1; j <= coeffs.size(); ++j) {
    const double r = std::sqrt(rng.uniform()) / static_cast<double>(j);
    coeffs[j - 1] = std::polar(r, rng.uniform(0.0, 2.0 * std::numbers::pi));
  }
  return NormalizedSeries(std::move(coeffs), order);
}

HullReport hull_membership_check(const NormalizedSeries& p, const NormalizedSeries& q,
                                 const ScanConfig& scan, const HullSampling& sampling) {
  scan.validate();
  if (sampling.radii < 1 || sampling.angles < 1 ||
      !(sampling.max_radius > 0.0 && sampling.max_radius <= 1.0)) {
    throw ParameterError("hull sampling grid is degenerate");
  }
  const NormalizedSeries pq = hadamard(p, q);

  HullReport report;
  report.tol = sampling.tol;
  report.p_min_re = boundary_min_re(p, scan).value;
  report.status = report.p_min_re >= 0.5 - sampling.tol ? HullStatus::checked
                                                         : HullStatus::vacuous;

  std::vector<Point> boundary(static_cast<std::size_t>(scan.grid_size));
  for (int i = 0; i < scan.grid_size; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / scan.grid_size;
    boundary[i] = evaluate(q, std::polar(scan.radius, theta));
  }
  const std::vector<Point> hull = convex_hull(std::move(boundary));
  report.hull_vertices = static_cast<int>(hull.size());

  // Outward unit normals and offsets of the hull edges.
  struct HalfPlane {
    double nx, ny, offset;
  };
  std::vector<HalfPlane> planes;
  if (hull.size() >= 3) {
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Point a = hull[i];
      const Point edge = hull[(i + 1) % hull.size()] - a;
      const double len = std::abs(edge);
      const double nx = edge.imag() / len;
      const double ny = -edge.real() / len;
      planes.push_back({nx, ny, nx * a.real() + ny * a.imag()});
    }
  }
  auto distance = [&](Point pt) {
    if (planes.empty()) return hull_signed_distance(hull, pt);
    double d = -std::numeric_limits<double>::infinity();
    for (const HalfPlane& h : planes) d = std::max(d, h.nx * pt.real() + h.ny * pt.imag() - h.offset);
    return d;
  };

  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 1; i <= sampling.radii; ++i) {
    const double r = sampling.max_radius * i / sampling.radii;
    for (int j = 0; j < sampling.angles; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / sampling.angles;
      worst = std::max(worst, distance(evaluate(pq, std::polar(r, theta))));
      ++report.samples;
    }
  }
  report.max_outside = worst;
  report.pass = worst <= sampling.tol;
  return report;
}

}  // namespace qps
