#include "qps/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qps/errors.hpp"

namespace qps {

namespace {

void check_shape(std::size_t size, int order, const char* what) {
  if (order < 1) {
    throw ConstructionError(std::string(what) + ": truncation order must be >= 1, got " +
                            std::to_string(order));
  }
  if (size != static_cast<std::size_t>(order - 1)) {
    throw ConstructionError(std::string(what) + ": expected " + std::to_string(order - 1) +
                            " coefficients for order " + std::to_string(order) + ", got " +
                            std::to_string(size));
  }
}

void require_same_order(int a, int b, const char* op) {
  if (a != b) {
    throw TruncationMismatch(std::string(op) + ": truncation orders differ (" +
                             std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

NormalizedSeries::NormalizedSeries(int order) {
  check_shape(order >= 1 ? static_cast<std::size_t>(order - 1) : 0, order, "NormalizedSeries");
  coeffs_.assign(static_cast<std::size_t>(order - 1), Complex{});
}

NormalizedSeries::NormalizedSeries(std::vector<Complex> coeffs, int order)
    : coeffs_(std::move(coeffs)) {
  check_shape(coeffs_.size(), order, "NormalizedSeries");
}

Complex NormalizedSeries::operator[](int power) const {
  if (power == 0) return {1.0, 0.0};
  return coeffs_.at(static_cast<std::size_t>(power - 1));
}

TailSeries::TailSeries(int order) {
  check_shape(order >= 1 ? static_cast<std::size_t>(order - 1) : 0, order, "TailSeries");
  coeffs_.assign(static_cast<std::size_t>(order - 1), Complex{});
}

TailSeries::TailSeries(std::vector<Complex> coeffs, int order) : coeffs_(std::move(coeffs)) {
  check_shape(coeffs_.size(), order, "TailSeries");
}

Complex TailSeries::operator[](int power) const {
  if (power == 0) return {};
  return coeffs_.at(static_cast<std::size_t>(power - 1));
}

NormalizedSeries hadamard_unit(int order) {
  return NormalizedSeries(std::vector<Complex>(static_cast<std::size_t>(std::max(order - 1, 0)),
                                               Complex{1.0, 0.0}),
                          order);
}

NormalizedSeries series_mul(const NormalizedSeries& u, const NormalizedSeries& v) {
  require_same_order(u.order(), v.order(), "series_mul");
  const int order = u.order();
  std::vector<Complex> out(static_cast<std::size_t>(order - 1));
  for (int j = 1; j < order; ++j) {
    Complex acc = u[j] + v[j];
    for (int i = 1; i < j; ++i) acc += u[i] * v[j - i];
    out[static_cast<std::size_t>(j - 1)] = acc;
  }
  return NormalizedSeries(std::move(out), order);
}

// u * w' = u' gives j w_j = j b_j - sum_{i<j} i w_i b_{j-i}.
TailSeries series_log(const NormalizedSeries& u) {
  const int order = u.order();
  std::vector<Complex> w(static_cast<std::size_t>(order - 1));
  for (int j = 1; j < order; ++j) {
    Complex acc{};
    for (int i = 1; i < j; ++i) acc += static_cast<double>(i) * w[i - 1] * u[j - i];
    w[static_cast<std::size_t>(j - 1)] = u[j] - acc / static_cast<double>(j);
  }
  return TailSeries(std::move(w), order);
}

// e' = w' e gives j e_j = sum_{i=1..j} i w_i e_{j-i}.
NormalizedSeries series_exp(const TailSeries& w) {
  const int order = w.order();
  std::vector<Complex> e(static_cast<std::size_t>(order - 1));
  auto coeff = [&](int power) { return power == 0 ? Complex{1.0, 0.0} : e[power - 1]; };
  for (int j = 1; j < order; ++j) {
    Complex acc{};
    for (int i = 1; i <= j; ++i) acc += static_cast<double>(i) * w[i] * coeff(j - i);
    e[static_cast<std::size_t>(j - 1)] = acc / static_cast<double>(j);
  }
  return NormalizedSeries(std::move(e), order);
}

NormalizedSeries series_pow(const NormalizedSeries& u, double alpha) {
  const TailSeries log_u = series_log(u);
  std::vector<Complex> scaled(log_u.coeffs().begin(), log_u.coeffs().end());
  for (auto& c : scaled) c *= alpha;
  return series_exp(TailSeries(std::move(scaled), u.order()));
}

NormalizedSeries hadamard(const NormalizedSeries& u, const NormalizedSeries& v) {
  require_same_order(u.order(), v.order(), "hadamard");
  std::vector<Complex> out(u.coeffs().size());
  std::transform(u.coeffs().begin(), u.coeffs().end(), v.coeffs().begin(), out.begin(),
                 [](Complex a, Complex b) { return a * b; });
  return NormalizedSeries(std::move(out), u.order());
}

Complex evaluate(const NormalizedSeries& u, Complex z) {
  Complex acc{};
  const auto c = u.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc + *it) * z;
  return acc + 1.0;
}

Complex evaluate(const TailSeries& w, Complex z) {
  Complex acc{};
  const auto c = w.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc + *it) * z;
  return acc;
}

namespace {

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

double max_coeff_diff(const NormalizedSeries& u, const NormalizedSeries& v) {
  require_same_order(u.order(), v.order(), "max_coeff_diff");
  return max_abs_diff(u.coeffs(), v.coeffs());
}

double max_coeff_diff(const TailSeries& u, const TailSeries& v) {
  require_same_order(u.order(), v.order(), "max_coeff_diff");
  return max_abs_diff(u.coeffs(), v.coeffs());
}

}  // namespace qps
