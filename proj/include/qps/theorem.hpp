#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qps/classes.hpp"
#include "qps/operators.hpp"
#include "qps/scan.hpp"
#include "qps/series.hpp"

namespace qps {

inline constexpr double kTheoremTol = 1e-6;

/// 1 - 2(1 - beta)(alpha + c)/(alpha + c + 1).
double theorem_bound(const ClassParams& params);

/// (alpha + c - 1)/(2(alpha + c)); theorem_bound >= 0 exactly when beta is at
/// least this value.
double nonnegativity_threshold(const ClassParams& params);

/// Series of D^n F_m^alpha / (alpha^n z^alpha) for the m-th quasi-partial
/// sum of the Bernardi transform of f.
NormalizedSeries quasi_partial_quantity(const NormalizedSeries& f_over_z,
                                        const ClassParams& params, int m);

/// The same series assembled as the Hadamard product p * q.
NormalizedSeries factorized_quantity(const NormalizedSeries& f_over_z, const ClassParams& params,
                                     int m);

struct VerificationReport {
  ClassParams params;
  int m = 0;
  int order = 0;
  double bound = 0.0;
  double observed_min = 0.0;
  double argmin_angle = 0.0;
  double margin = 0.0;
  double tol = kTheoremTol;
  bool hypothesis_ok = false;
  /// Empty when the hypothesis alpha + c <= A fails or the cell errored.
  std::optional<bool> pass;
  /// Largest coefficient deviation between the pipeline and p * q, relative
  /// to max(1, |coefficient|).
  double factorization_residual = 0.0;
  std::vector<std::string> diagnostics;
  std::optional<std::string> error;
};

struct VerifyOptions {
  /// Also scan the class condition for f itself and note a failure.
  bool check_membership = false;
  ScanConfig membership_scan{4096, 1e-10, 0.999};
};

/// Scans the quasi-partial-sum quantity and compares it with theorem_bound.
/// Throws ParameterError unless 2 <= m <= f_over_z.order().
VerificationReport verify_theorem(const NormalizedSeries& f_over_z, const ClassParams& params,
                                  int m, const ScanConfig& scan, double tol = kTheoremTol,
                                  const VerifyOptions& options = {});

struct SweepCell {
  ClassParams params;
  int m = 2;
};

struct SweepConfig {
  std::vector<SweepCell> cells;
  int spec_count = 1;
  std::uint64_t seed = 0;
  int order = 64;
  ScanConfig scan;
  double tol = kTheoremTol;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// The kernel used for draw `draw` of cell `cell` in a seeded sweep.
KernelSpec sweep_kernel(std::uint64_t seed, std::size_t cell, int draw);

/// One report per (cell, draw), ordered cell-major as in the input grid.
/// Errors in a cell are recorded in that report and do not stop the sweep.
/// Throws ParameterError on an empty grid or spec_count < 1.
std::vector<VerificationReport> sweep(const SweepConfig& config);

struct TightnessResult {
  double min_margin = 0.0;
  KernelSpec witness = KernelSpec::unit();
  int evaluated = 0;
};

/// Smallest margin over the unit kernel followed by `budget` seeded random
/// kernels. Single-point kernels are rotations of the unit kernel and give
/// the same margin, so only the unit kernel represents them.
TightnessResult tightness_probe(const ClassParams& params, int m, const ScanConfig& scan,
                                int budget, std::uint64_t seed = 0, int order = 64);

}  // namespace qps
