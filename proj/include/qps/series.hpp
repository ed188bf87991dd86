#pragma once

#include <complex>
#include <span>
#include <vector>

namespace qps {

using Complex = std::complex<double>;

/// Truncated power series 1 + b_2 z + ... + b_M z^{M-1}.
///
/// The constant term is implicitly 1 and is never stored. Depending on
/// context the series stands for f(z)/z, f(z)^a/z^a, or one of the
/// factorization kernels p and q. The truncation order M is the number of
/// retained terms, so M == 1 is the constant series 1.
class NormalizedSeries {
 public:
  /// The constant series 1 at truncation order `order`.
  explicit NormalizedSeries(int order = 1);

  /// Throws ConstructionError unless coeffs.size() == order - 1 and order >= 1.
  NormalizedSeries(std::vector<Complex> coeffs, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) + 1; }

  /// b_2 ... b_M, i.e. the coefficients of z^1 ... z^{M-1}.
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of z^power for 0 <= power < order(); power 0 yields 1.
  Complex operator[](int power) const;

  bool operator==(const NormalizedSeries&) const = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Truncated series with zero constant term: w_1 z + ... + w_{M-1} z^{M-1}.
/// Domain of series_exp and range of series_log.
class TailSeries {
 public:
  explicit TailSeries(int order = 1);
  TailSeries(std::vector<Complex> coeffs, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) + 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex operator[](int power) const;

  bool operator==(const TailSeries&) const = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Truncated 1/(1-z), the unit of the Hadamard product.
NormalizedSeries hadamard_unit(int order);

/// Truncated Cauchy product. Throws TruncationMismatch on differing orders.
NormalizedSeries series_mul(const NormalizedSeries& u, const NormalizedSeries& v);

TailSeries series_log(const NormalizedSeries& u);
NormalizedSeries series_exp(const TailSeries& w);

/// Principal branch u^alpha, computed as exp(alpha * log u).
NormalizedSeries series_pow(const NormalizedSeries& u, double alpha);

/// Termwise product; the constant terms multiply to 1.
NormalizedSeries hadamard(const NormalizedSeries& u, const NormalizedSeries& v);

/// Horner evaluation of the truncated polynomial.
Complex evaluate(const NormalizedSeries& u, Complex z);
Complex evaluate(const TailSeries& w, Complex z);

/// Largest |u_j - v_j| over all powers. Throws TruncationMismatch.
double max_coeff_diff(const NormalizedSeries& u, const NormalizedSeries& v);
double max_coeff_diff(const TailSeries& u, const TailSeries& v);

/// Applies coefficient(power) *= weight(power) for power >= 1.
template <typename WeightFn>
NormalizedSeries scale_coefficients(const NormalizedSeries& u, WeightFn&& weight) {
  std::vector<Complex> out(u.coeffs().begin(), u.coeffs().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] *= weight(static_cast<int>(i) + 1);
  }
  return NormalizedSeries(std::move(out), u.order());
}

}  // namespace qps
