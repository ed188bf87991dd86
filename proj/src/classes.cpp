#include "qps/classes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "qps/errors.hpp"

namespace qps {

KernelSpec::KernelSpec(std::vector<Complex> points, std::vector<double> weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
  if (points_.empty()) throw ConstructionError("KernelSpec: at least one point required");
  if (points_.size() != weights_.size()) {
    throw ConstructionError("KernelSpec: points and weights differ in length");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (std::abs(std::abs(points_[i]) - 1.0) > 1e-12) {
      throw ConstructionError("KernelSpec: point " + std::to_string(i) + " is not unimodular");
    }
    if (!(weights_[i] > 0.0)) {
      throw ConstructionError("KernelSpec: weight " + std::to_string(i) + " is not positive");
    }
  }
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) {
    throw ConstructionError("KernelSpec: weights must sum to 1");
  }
}

KernelSpec KernelSpec::unit() { return KernelSpec({Complex{1.0, 0.0}}, {1.0}); }

KernelSpec random_kernel(Rng& rng) {
  const int size = rng.uniform_int(1, 8);
  std::vector<Complex> points;
  std::vector<double> weights;
  for (int i = 0; i < size; ++i) {
    points.push_back(std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi)));
    weights.push_back(-std::log(rng.uniform_open()));
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (auto& w : weights) w /= total;
  return KernelSpec(std::move(points), std::move(weights));
}

NormalizedSeries caratheodory_mixture(const KernelSpec& spec, int order, Truncation mode) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(std::max(order - 1, 0)));
  for (std::size_t i = 0; i < spec.points().size(); ++i) {
    const Complex x = spec.points()[i];
    const double w = 2.0 * spec.weights()[i];
    Complex power = x;
    for (auto& c : coeffs) {
      c += w * power;
      power *= x;
    }
  }
  if (mode == Truncation::fejer) {
    for (int k = 1; k < order; ++k) coeffs[k - 1] *= 1.0 - static_cast<double>(k) / order;
  }
  return NormalizedSeries(std::move(coeffs), order);
}

NormalizedSeries generate_member(const KernelSpec& spec, const ClassParams& params, int order,
                                 Truncation mode) {
  params.validate();
  const NormalizedSeries h = caratheodory_mixture(spec, order, mode);
  const double lead = 2.0 * (1.0 - params.beta);
  const double alpha = params.alpha;
  const int n = params.n;
  // p_j = h_j / 2, so a_j(alpha) = (1 - beta) h_j (alpha/(alpha + j))^n.
  const NormalizedSeries f_alpha = scale_coefficients(
      h, [=](int j) { return 0.5 * lead * std::pow(alpha / (alpha + j), n); });
  return drop_alpha(f_alpha, alpha);
}

NormalizedSeries membership_quantity(const NormalizedSeries& f_over_z, const ClassParams& params) {
  params.validate();
  return salagean_normalized(lift_f_to_alpha(f_over_z, params.alpha), params.n, params.alpha);
}

MembershipReport membership_infimum(const NormalizedSeries& f_over_z, const ClassParams& params,
                                    const ScanConfig& scan, double tol) {
  const ScanMinimum found = boundary_min_re(membership_quantity(f_over_z, params), scan);
  MembershipReport report;
  report.infimum = found.value;
  report.argmin_angle = found.angle;
  report.beta_threshold = params.beta;
  report.tol = tol;
  report.is_member = found.value >= params.beta - tol;
  return report;
}

bool is_member(const NormalizedSeries& f_over_z, const ClassParams& params, double tol) {
  ScanConfig scan;
  scan.radius = 0.999;
  return membership_infimum(f_over_z, params, scan, tol).is_member;
}

}  // namespace qps
