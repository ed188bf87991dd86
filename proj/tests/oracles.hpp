#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the evaluation or minimization paths it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "qps/random.hpp"
#include "qps/series.hpp"

namespace qps::oracle {

/// Unit series with |b_j| <= 0.9 * 2^-j, so |u - 1| < 0.9 on the closed disk
/// and u has no zeros there.
inline NormalizedSeries random_unit_series(Rng& rng, int order, double scale = 0.9) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(order - 1));
  for (int j = 1; j < order; ++j) {
    const double r = scale * std::ldexp(std::sqrt(rng.uniform()), -j);
    coeffs[j - 1] = std::polar(r, rng.uniform(0.0, 2.0 * std::numbers::pi));
  }
  return NormalizedSeries(std::move(coeffs), order);
}

/// Series with coefficient of z^j uniform in the disk of radius 1/j.
inline NormalizedSeries random_bounded_series(Rng& rng, int order) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(order - 1));
  for (int j = 1; j < order; ++j) {
    coeffs[j - 1] = std::polar(std::sqrt(rng.uniform()) / j,
                               rng.uniform(0.0, 2.0 * std::numbers::pi));
  }
  return NormalizedSeries(std::move(coeffs), order);
}

/// Re of 1 + sum c_k z^k at z = r e^{i theta}, summed term by term with an
/// explicit cos/sin expansion.
inline double re_direct(std::span<const Complex> coeffs, double r, double theta) {
  double acc = 1.0;
  double rk = 1.0;
  for (std::size_t k = 1; k <= coeffs.size(); ++k) {
    rk *= r;
    const double kt = static_cast<double>(k) * theta;
    acc += rk * (coeffs[k - 1].real() * std::cos(kt) - coeffs[k - 1].imag() * std::sin(kt));
  }
  return acc;
}

struct DenseMin {
  double value = std::numeric_limits<double>::infinity();
  double theta = 0.0;
};

/// Plain minimum over `points` equally spaced angles of Re u(r e^{i theta}).
/// Powers of z come from repeated multiplication, not Horner's rule.
inline DenseMin dense_min_re(const NormalizedSeries& u, double r, int points = 1'000'000) {
  DenseMin best;
  const auto c = u.coeffs();
  for (int i = 0; i < points; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / points;
    const Complex z = std::polar(r, theta);
    Complex power = z;
    double value = 1.0;
    for (const Complex& b : c) {
      value += (b * power).real();
      power *= z;
    }
    if (value < best.value) best = {value, theta};
  }
  return best;
}

/// Plain Cauchy product of full coefficient vectors (index = power).
inline std::vector<Complex> full_product(const std::vector<Complex>& a,
                                         const std::vector<Complex>& b, std::size_t keep) {
  std::vector<Complex> out(keep);
  for (std::size_t i = 0; i < a.size() && i < keep; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < keep; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline std::vector<Complex> full_coeffs(const NormalizedSeries& u) {
  std::vector<Complex> out{Complex{1.0, 0.0}};
  out.insert(out.end(), u.coeffs().begin(), u.coeffs().end());
  return out;
}

/// Dense-grid minimum of 1/(1+g) + sum_{k<=l} cos(k t)/(k+g) over t in [0, pi].
inline double dense_cosine_min(double gamma, int l, int points = 200'001) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i) {
    const double t = std::numbers::pi * i / (points - 1);
    double s = 1.0 / (1.0 + gamma);
    for (int k = 1; k <= l; ++k) s += std::cos(k * t) / (k + gamma);
    best = std::min(best, s);
  }
  return best;
}

/// Even-odd point-in-polygon test with an explicit boundary tolerance.
inline bool inside_polygon(const std::vector<Complex>& poly, Complex pt, double tol) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = poly[i];
    const Complex b = poly[(i + 1) % n];
    const Complex ab = b - a;
    const double t = std::clamp(((pt - a) * std::conj(ab)).real() / std::norm(ab), 0.0, 1.0);
    if (std::abs(pt - (a + t * ab)) <= tol) return true;
  }
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Complex a = poly[i];
    const Complex b = poly[j];
    if ((a.imag() > pt.imag()) != (b.imag() > pt.imag()) &&
        pt.real() < (b.real() - a.real()) * (pt.imag() - a.imag()) / (b.imag() - a.imag()) +
                        a.real()) {
      inside = !inside;
    }
  }
  return inside;
}

}  // namespace qps::oracle
