// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "oracles.hpp"
#include "qps/cli.hpp"
#include "qps/io.hpp"
#include "qps/lemmas.hpp"
#include "qps/theorem.hpp"

using namespace qps;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

ClassParams admissible_params(Rng& rng) {
  ClassParams p;
  p.n = rng.uniform_int(0, 3);
  p.alpha = rng.uniform(0.2, 3.0);
  p.beta = rng.uniform(0.0, 0.95);
  p.c = rng.uniform(-p.alpha + 0.05, 4.5 - p.alpha);
  return p;
}

ScanConfig at_radius(double r) {
  ScanConfig scan;
  scan.radius = r;
  return scan;
}

// 1. Best cosine-sum constant through the command line.
Outcome gasper_constant() {
  const auto start = Clock::now();
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"lemma", "gasper", "--lmax", "200", "--tol", "1e-4"}, out, err);
  const double elapsed = seconds_since(start);
  if (code != 0) return {false, "exit " + std::to_string(code) + ": " + err.str()};
  const double constant = io::Json::parse(out.str())["estimate"]["constant"].get<double>();
  const double at4 = cosine_sum_min(4.0, 200, ScanConfig{}).value;
  const double at5 = cosine_sum_min(5.0, 200, ScanConfig{}).value;
  const bool pass = std::abs(constant - 4.5678018) <= 1e-3 && elapsed < 60.0 && at4 >= 0.0 && at5 < 0.0;
  return {pass, fmt::format("A = {:.7f} (|err| {:.1e}), {:.2f} s; min(4.0) = {:.3g}, min(5.0) = {:.3g}",
                            constant, std::abs(constant - 4.5678018), elapsed, at4, at5)};
}

// 2. Libera case n = alpha = c = 1, beta = 1/4 on 50 seeded members.
Outcome libera_reproduction() {
  const auto start = Clock::now();
  SweepConfig config;
  for (int m : {2, 5, 10, 32, 64}) config.cells.push_back({ClassParams{1, 1.0, 0.25, 1.0}, m});
  config.spec_count = 50;
  config.seed = 2007;
  config.order = 64;
  const auto reports = sweep(config);
  const double elapsed = seconds_since(start);
  double worst = std::numeric_limits<double>::infinity();
  bool ok = reports.size() == 250;
  for (const auto& r : reports) {
    if (r.error) ok = false;
    worst = std::min(worst, r.observed_min);
  }
  const bool pass = ok && worst >= 0.0 - 1e-6 && elapsed < 30.0;
  return {pass, fmt::format("{} reports, min observed {:.3e} (bound 0), {:.2f} s", reports.size(),
                            worst, elapsed)};
}

// 3. Bound algebra.
Outcome bound_algebra() {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double beta = i / 100.0;
    worst = std::max(worst, std::abs(theorem_bound({1, 1.0, beta, 1.0}) - (4.0 * beta - 1.0) / 3.0));
  }
  const double threshold = nonnegativity_threshold({1, 1.0, 0.5, 1.0});
  return {worst <= 1e-15 && threshold == 0.25,
          fmt::format("max |bound - (4b-1)/3| = {:.1e}, threshold = {}", worst, threshold)};
}

// 4. Libera and Remark weights of the Bernardi transform.
Outcome bernardi_weights() {
  const auto unit = hadamard_unit(64);
  const auto libera = bernardi(unit, 1.0, 1.0);
  const auto remark = bernardi(unit, 1.0, 0.0);
  double worst = 0.0;
  for (int k = 2; k <= 64; ++k) {
    worst = std::max(worst, std::abs(libera[k - 1] - 2.0 / (k + 1)));
    worst = std::max(worst, std::abs(remark[k - 1] - 1.0 / k));
  }
  return {worst <= 1e-15, fmt::format("max weight error {:.1e} over k = 2..64", worst)};
}

// 5. Operator pipeline against the Hadamard product of p and q.
Outcome factorization() {
  Rng rng(3003);
  double worst = 0.0;
  for (int draw = 0; draw < 200; ++draw) {
    const ClassParams params = admissible_params(rng);
    const NormalizedSeries f = draw % 2 == 0 ? oracle::random_unit_series(rng, 64)
                                             : generate_member(random_kernel(rng), params, 64);
    const int m = rng.uniform_int(2, 64);
    worst = std::max(worst, verify_theorem(f, params, m, ScanConfig{}).factorization_residual);
  }
  return {worst < 1e-12, fmt::format("max residual {:.2e} over 200 draws", worst)};
}

// 6. Real-part lower bound over the gamma x l grid.
Outcome real_part_bound() {
  double worst_margin = std::numeric_limits<double>::infinity();
  for (double gamma : {-0.5, 0.0, 1.0, 2.0, 3.0, 4.0, 4.5}) {
    for (int l : {1, 2, 5, 10, 50}) {
      const double margin = real_part_min(gamma, l, ScanConfig{}).value + 1.0 / (1.0 + gamma);
      worst_margin = std::min(worst_margin, margin);
    }
  }
  const auto single = real_part_min(1.0, 1, ScanConfig{});
  const bool pass = worst_margin >= -1e-8 && std::abs(single.value + 0.5) <= 1e-9 &&
                    std::abs(single.angle - std::numbers::pi) <= 1e-7;
  return {pass, fmt::format("min (scan + 1/(1+g)) = {:.3e}; l=1,g=1: {:.12f} at theta {:.9f}",
                            worst_margin, single.value, single.angle)};
}

// 7. Convolution hull property.
Outcome convolution_hull() {
  Rng rng(7007);
  double worst = -std::numeric_limits<double>::infinity();
  bool ok = true;
  for (int pair = 0; pair < 20; ++pair) {
    const auto p = half_plane_kernel(random_kernel(rng), 32);
    const auto q = random_analytic(rng, 32);
    const auto report = hull_membership_check(p, q, ScanConfig{});
    if (report.status != HullStatus::checked) ok = false;
    worst = std::max(worst, report.max_outside);
  }
  const auto q = random_analytic(rng, 32);
  const bool identity = hadamard(hadamard_unit(32), q) == q;
  return {ok && worst <= 1e-6 && identity,
          fmt::format("20 admissible pairs, max outside distance {:.3e}; identity exact: {}", worst,
                      identity)};
}

// 8. Round trips, dense-scan oracle and generated-member self-consistency.
Outcome round_trips_and_oracles() {
  Rng rng(8008);
  double trip = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto u = oracle::random_unit_series(rng, 64);
    trip = std::max(trip, max_coeff_diff(series_exp(series_log(u)), u));
    const auto w_src = oracle::random_unit_series(rng, 64);
    const TailSeries w({w_src.coeffs().begin(), w_src.coeffs().end()}, 64);
    trip = std::max(trip, max_coeff_diff(series_log(series_exp(w)), w));
    for (double alpha : {0.5, 2.0, 3.7}) {
      trip = std::max(trip, max_coeff_diff(series_pow(series_pow(u, alpha), 1.0 / alpha), u));
    }
  }

  double scan_err = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto u = oracle::random_bounded_series(rng, rng.uniform_int(2, 32));
    scan_err = std::max(scan_err, std::abs(boundary_min_re(u, ScanConfig{}).value -
                                           oracle::dense_min_re(u, 1.0).value));
  }

  int members = 0;
  for (int i = 0; i < 100; ++i) {
    const ClassParams params = admissible_params(rng);
    const auto f = generate_member(random_kernel(rng), params, 64, Truncation::fejer);
    if (membership_infimum(f, params, at_radius(0.999), 1e-6).is_member) ++members;
  }
  return {trip < 1e-12 && scan_err < 1e-8 && members == 100,
          fmt::format("round trip {:.2e}; scan vs 1e6-point dense {:.2e}; members {}/100", trip,
                      scan_err, members)};
}

// 9. Remark case alpha = 1, c = 0: partial sums stay in the class.
Outcome remark_regression() {
  SweepConfig config;
  for (double beta : {0.0, 0.3, 0.6}) {
    for (int m : {2, 8, 32}) config.cells.push_back({ClassParams{1, 1.0, beta, 0.0}, m});
  }
  config.spec_count = 20;
  config.seed = 9009;
  const auto reports = sweep(config);
  double worst = std::numeric_limits<double>::infinity();
  bool ok = true;
  for (const auto& r : reports) {
    if (r.error) ok = false;
    worst = std::min(worst, r.observed_min - r.params.beta);
  }
  return {ok && worst >= -1e-6,
          fmt::format("{} reports, min (observed - beta) = {:.3e}", reports.size(), worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 cosine-sum constant", gasper_constant},
      {"2 Libera partial sums (beta = 1/4)", libera_reproduction},
      {"3 bound algebra", bound_algebra},
      {"4 Libera/Bernardi weights", bernardi_weights},
      {"5 p*q factorization", factorization},
      {"6 real-part lower bound", real_part_bound},
      {"7 convolution hull", convolution_hull},
      {"8 round trips and oracles", round_trips_and_oracles},
      {"9 alpha = 1, c = 0 partial sums", remark_regression},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failed;
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << name << ": " << outcome.detail << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
