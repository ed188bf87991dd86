#include "qps/operators.hpp"

#include <cmath>
#include <string>

#include "qps/errors.hpp"

namespace qps {

void ClassParams::validate() const {
  if (n < 0) throw ParameterError("n must be >= 0, got " + std::to_string(n));
  if (!(alpha > 0.0)) throw ParameterError("alpha must be > 0");
  if (!(beta >= 0.0 && beta < 1.0)) throw ParameterError("beta must lie in [0, 1)");
  if (!(alpha + c > 0.0)) throw ParameterError("alpha + c must be > 0");
}

namespace {

void require_positive_alpha(double alpha) {
  if (!(alpha > 0.0)) throw ParameterError("alpha must be > 0");
}

void require_truncation(int m, int order) {
  if (m < 1 || m > order) {
    throw ParameterError("m must lie in [1, " + std::to_string(order) + "], got " +
                         std::to_string(m));
  }
}

}  // namespace

NormalizedSeries lift_f_to_alpha(const NormalizedSeries& f_over_z, double alpha) {
  require_positive_alpha(alpha);
  return series_pow(f_over_z, alpha);
}

NormalizedSeries drop_alpha(const NormalizedSeries& f_alpha_over_zalpha, double alpha) {
  require_positive_alpha(alpha);
  return series_pow(f_alpha_over_zalpha, 1.0 / alpha);
}

NormalizedSeries salagean_normalized(const NormalizedSeries& u, int n, double alpha) {
  if (n < 0) throw ParameterError("Salagean order n must be >= 0");
  require_positive_alpha(alpha);
  if (n == 0) return u;
  return scale_coefficients(u, [n, alpha](int j) { return std::pow((alpha + j) / alpha, n); });
}

NormalizedSeries bernardi(const NormalizedSeries& u, double alpha, double c) {
  const double s = alpha + c;
  if (!(s > 0.0)) throw ParameterError("bernardi requires alpha + c > 0");
  return scale_coefficients(u, [s](int j) { return s / (s + j); });
}

NormalizedSeries quasi_partial_sum(const NormalizedSeries& u, int m) {
  require_truncation(m, u.order());
  return scale_coefficients(u, [m](int j) { return j <= m - 1 ? 1.0 : 0.0; });
}

NormalizedSeries p_transform(const NormalizedSeries& u, const ClassParams& params) {
  params.validate();
  const double scale = 1.0 / (2.0 * (1.0 - params.beta));
  const double alpha = params.alpha;
  const int n = params.n;
  return scale_coefficients(
      u, [=](int j) { return std::pow((alpha + j) / alpha, n) * scale; });
}

NormalizedSeries q_kernel(int m, const ClassParams& params, int order) {
  params.validate();
  require_truncation(m, order);
  const double s = params.alpha + params.c;
  const double lead = 2.0 * (1.0 - params.beta);
  std::vector<Complex> coeffs(static_cast<std::size_t>(order - 1));
  for (int j = 1; j <= m - 1; ++j) coeffs[j - 1] = lead * s / (s + j);
  return NormalizedSeries(std::move(coeffs), order);
}

}  // namespace qps
