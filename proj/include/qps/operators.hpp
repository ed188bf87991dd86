#pragma once

#include "qps/series.hpp"

namespace qps {

/// Best constant of the nonnegative cosine sum
/// 1/(1+g) + sum_{k<=l} cos(k t)/(k+g) >= 0, to the digits quoted in the
/// literature. Also the upper limit on alpha + c for the quasi-partial-sum bound.
inline constexpr double kGasperConstant = 4.5678018;

/// Parameters (n, alpha, beta, c) of the class T_n^alpha(beta) and of the
/// generalized Bernardi integral.
struct ClassParams {
  int n = 1;
  double alpha = 1.0;
  double beta = 0.0;
  double c = 1.0;

  /// Throws ParameterError unless n >= 0, alpha > 0, 0 <= beta < 1 and alpha + c > 0.
  void validate() const;

  /// alpha + c <= kGasperConstant, the hypothesis of the lower bound.
  bool hypothesis_ok() const noexcept { return alpha + c <= kGasperConstant; }

  bool operator==(const ClassParams&) const = default;
};

/// f(z)/z -> f(z)^alpha / z^alpha (principal branch).
NormalizedSeries lift_f_to_alpha(const NormalizedSeries& f_over_z, double alpha);

/// Inverse of lift_f_to_alpha: input^(1/alpha).
NormalizedSeries drop_alpha(const NormalizedSeries& f_alpha_over_zalpha, double alpha);

/// Series of D^n f^alpha / (alpha^n z^alpha): coefficient of z^j scaled by
/// ((alpha + j)/alpha)^n.
NormalizedSeries salagean_normalized(const NormalizedSeries& u, int n, double alpha);

/// Series of F^alpha / z^alpha under the generalized Bernardi integral:
/// coefficient of z^j scaled by (alpha + c)/(alpha + c + j).
NormalizedSeries bernardi(const NormalizedSeries& u, double alpha, double c);

/// Keeps b_2..b_m (powers z^1..z^{m-1}) and zeroes the rest; order unchanged.
NormalizedSeries quasi_partial_sum(const NormalizedSeries& u, int m);

/// p(z) = 1 + sum ((alpha+j)/alpha)^n b_j z^j / (2(1 - beta)).
NormalizedSeries p_transform(const NormalizedSeries& u, const ClassParams& params);

/// q(z) = 1 + 2(1 - beta) sum_{j=1}^{m-1} (alpha + c)/(alpha + c + j) z^j at
/// truncation order `order`; coefficients above z^{m-1} are zero.
NormalizedSeries q_kernel(int m, const ClassParams& params, int order);

}  // namespace qps
