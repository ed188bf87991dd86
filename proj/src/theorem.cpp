#include "qps/theorem.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "qps/errors.hpp"

namespace qps {

namespace {

double bernardi_sum(const ClassParams& params) {
  const double s = params.alpha + params.c;
  if (!(s > 0.0)) throw ParameterError("alpha + c must be > 0");
  return s;
}

double relative_residual(const NormalizedSeries& expected, const NormalizedSeries& actual) {
  double worst = 0.0;
  for (int j = 1; j < expected.order(); ++j) {
    const double scale = std::max(1.0, std::abs(expected[j]));
    worst = std::max(worst, std::abs(expected[j] - actual[j]) / scale);
  }
  return worst;
}

}  // namespace

double theorem_bound(const ClassParams& params) {
  const double s = bernardi_sum(params);
  return 1.0 - 2.0 * (1.0 - params.beta) * s / (s + 1.0);
}

double nonnegativity_threshold(const ClassParams& params) {
  const double s = bernardi_sum(params);
  return (s - 1.0) / (2.0 * s);
}

NormalizedSeries quasi_partial_quantity(const NormalizedSeries& f_over_z,
                                        const ClassParams& params, int m) {
  params.validate();
  const NormalizedSeries lifted = lift_f_to_alpha(f_over_z, params.alpha);
  const NormalizedSeries partial =
      quasi_partial_sum(bernardi(lifted, params.alpha, params.c), m);
  return salagean_normalized(partial, params.n, params.alpha);
}

NormalizedSeries factorized_quantity(const NormalizedSeries& f_over_z, const ClassParams& params,
                                     int m) {
  params.validate();
  const NormalizedSeries lifted = lift_f_to_alpha(f_over_z, params.alpha);
  return hadamard(p_transform(lifted, params), q_kernel(m, params, f_over_z.order()));
}

VerificationReport verify_theorem(const NormalizedSeries& f_over_z, const ClassParams& params,
                                  int m, const ScanConfig& scan, double tol,
                                  const VerifyOptions& options) {
  params.validate();
  scan.validate();
  if (m < 2 || m > f_over_z.order()) {
    throw ParameterError("m must lie in [2, " + std::to_string(f_over_z.order()) + "], got " +
                         std::to_string(m));
  }

  VerificationReport report;
  report.params = params;
  report.m = m;
  report.order = f_over_z.order();
  report.tol = tol;
  report.bound = theorem_bound(params);
  report.hypothesis_ok = params.hypothesis_ok();

  const NormalizedSeries quantity = quasi_partial_quantity(f_over_z, params, m);
  const ScanMinimum found = boundary_min_re(quantity, scan);
  report.observed_min = found.value;
  report.argmin_angle = found.angle;
  report.margin = found.value - report.bound;
  report.factorization_residual =
      relative_residual(quantity, factorized_quantity(f_over_z, params, m));

  if (report.hypothesis_ok) {
    report.pass = report.margin >= -tol;
  } else {
    report.diagnostics.push_back("alpha + c exceeds the cosine-sum constant; no bound is claimed");
  }
  if (options.check_membership) {
    const MembershipReport membership =
        membership_infimum(f_over_z, params, options.membership_scan, tol);
    if (!membership.is_member) {
      report.diagnostics.push_back("input is not a class member (infimum " +
                                   std::to_string(membership.infimum) + " < beta)");
    }
  }
  return report;
}

KernelSpec sweep_kernel(std::uint64_t seed, std::size_t cell, int draw) {
  Rng rng{seed, static_cast<std::uint64_t>(cell), static_cast<std::uint64_t>(draw)};
  return random_kernel(rng);
}

std::vector<VerificationReport> sweep(const SweepConfig& config) {
  if (config.cells.empty()) throw ParameterError("sweep grid is empty");
  if (config.spec_count < 1) throw ParameterError("spec_count must be >= 1");

  const std::size_t draws = static_cast<std::size_t>(config.spec_count);
  const std::size_t total = config.cells.size() * draws;
  std::vector<VerificationReport> reports(total);

  auto run_one = [&](std::size_t index) {
    const std::size_t cell_index = index / draws;
    const int draw = static_cast<int>(index % draws);
    const SweepCell& cell = config.cells[cell_index];
    try {
      const KernelSpec spec = sweep_kernel(config.seed, cell_index, draw);
      const NormalizedSeries f = generate_member(spec, cell.params, config.order);
      reports[index] = verify_theorem(f, cell.params, cell.m, config.scan, config.tol);
    } catch (const std::exception& e) {
      VerificationReport failed;
      failed.params = cell.params;
      failed.m = cell.m;
      failed.order = config.order;
      failed.tol = config.tol;
      failed.error = e.what();
      reports[index] = std::move(failed);
    }
  };

  unsigned workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(std::min<std::size_t>(total, 64)));
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < total; i = next++) run_one(i);
      });
    }
  }
  return reports;
}

TightnessResult tightness_probe(const ClassParams& params, int m, const ScanConfig& scan,
                                int budget, std::uint64_t seed, int order) {
  auto margin_of = [&](const KernelSpec& spec) {
    const NormalizedSeries f = generate_member(spec, params, order);
    return verify_theorem(f, params, m, scan).margin;
  };

  TightnessResult result;
  result.min_margin = margin_of(result.witness);
  result.evaluated = 1;
  Rng rng{seed, 0x7469676874ull};
  for (int i = 0; i < budget; ++i) {
    const KernelSpec candidate = random_kernel(rng);
    const double margin = margin_of(candidate);
    ++result.evaluated;
    if (margin < result.min_margin) {
      result.min_margin = margin;
      result.witness = candidate;
    }
  }
  return result;
}

}  // namespace qps
