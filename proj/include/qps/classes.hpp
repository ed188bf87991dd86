#pragma once

#include <vector>

#include "qps/operators.hpp"
#include "qps/random.hpp"
#include "qps/scan.hpp"
#include "qps/series.hpp"

namespace qps {

/// Finite Herglotz mixture h(z) = sum_j w_j (1 + x_j z)/(1 - x_j z) with
/// unimodular x_j and positive weights summing to 1.
class KernelSpec {
 public:
  /// Throws ConstructionError on |x_j| != 1, w_j <= 0, sum w_j != 1 (all to
  /// 1e-12), mismatched lengths, or an empty mixture.
  KernelSpec(std::vector<Complex> points, std::vector<double> weights);

  /// The single point x = 1: h(z) = (1 + z)/(1 - z).
  static KernelSpec unit();

  const std::vector<Complex>& points() const noexcept { return points_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  bool operator==(const KernelSpec&) const = default;

 private:
  std::vector<Complex> points_;
  std::vector<double> weights_;
};

/// How the infinite Herglotz series is cut at order M.
///
/// `plain` keeps the coefficients 2 sum w_j x_j^k unchanged; the cut
/// polynomial is not of positive real part near the circle. `fejer` damps
/// coefficient k by (1 - k/M), which gives a polynomial whose real part is
/// nonnegative on the closed disk.
enum class Truncation { plain, fejer };

/// Random mixture: 1 to 8 points uniform on the circle, weights from a flat
/// Dirichlet draw.
KernelSpec random_kernel(Rng& rng);

/// Truncated h(z) = 1 + 2 sum_j w_j sum_{k>=1} x_j^k z^k.
NormalizedSeries caratheodory_mixture(const KernelSpec& spec, int order,
                                      Truncation mode = Truncation::plain);

/// Builds f(z)/z for a member of T_n^alpha(beta) from a Herglotz mixture.
///
/// With p = (1 + h)/2 the coefficients a_k(alpha) = 2(1 - beta) p_{k-1}
/// (alpha/(alpha + k - 1))^n make D^n f^alpha/(alpha^n z^alpha) equal to
/// beta + (1 - beta) h.
NormalizedSeries generate_member(const KernelSpec& spec, const ClassParams& params, int order,
                                 Truncation mode = Truncation::plain);

inline constexpr double kDefaultMembershipTol = 1e-6;

struct MembershipReport {
  double infimum = 0.0;
  double argmin_angle = 0.0;
  double beta_threshold = 0.0;
  double tol = kDefaultMembershipTol;
  bool is_member = false;
};

/// The series of D^n f^alpha / (alpha^n z^alpha), whose real part defines the class.
NormalizedSeries membership_quantity(const NormalizedSeries& f_over_z, const ClassParams& params);

MembershipReport membership_infimum(const NormalizedSeries& f_over_z, const ClassParams& params,
                                    const ScanConfig& scan, double tol = kDefaultMembershipTol);

/// Scans at radius 0.999 with default grid settings.
bool is_member(const NormalizedSeries& f_over_z, const ClassParams& params,
               double tol = kDefaultMembershipTol);

}  // namespace qps
