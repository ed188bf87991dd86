#include "qps/cli.hpp"

#include <fmt/format.h>

#include <fstream>
#include <ostream>
#include <vector>

#include "CLI11.hpp"
#include "qps/classes.hpp"
#include "qps/errors.hpp"
#include "qps/io.hpp"
#include "qps/lemmas.hpp"
#include "qps/theorem.hpp"

namespace qps::cli {

namespace {

using io::Json;

struct Options {
  ClassParams params;
  int m = 0;
  int order = 64;
  int l_max = 200;
  std::vector<double> gammas;
  double tol = -1.0;  // < 0: command-specific default
  int grid_size = 4096;
  double radius = -1.0;  // < 0: command-specific default
  std::uint64_t seed = 0;
  int random = 0;
  std::string input;
  std::string kernel;
  std::string grid;
  std::string p_path;
  std::string q_path;
  std::string truncation = "fejer";
  bool check_membership = false;
  std::string out;
  std::string format = "json";

  ScanConfig scan(double default_radius) const {
    ScanConfig s;
    s.grid_size = grid_size;
    s.radius = radius < 0.0 ? default_radius : radius;
    return s;
  }

  double tolerance(double fallback) const { return tol < 0.0 ? fallback : tol; }
};

void add_params(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.params.n, "Salagean order n")->capture_default_str();
  cmd->add_option("--alpha", o.params.alpha, "exponent alpha > 0")->capture_default_str();
  cmd->add_option("--beta", o.params.beta, "class level 0 <= beta < 1")->capture_default_str();
  cmd->add_option("--c", o.params.c, "Bernardi parameter, alpha + c > 0")->capture_default_str();
}

void add_scan(CLI::App* cmd, Options& o) {
  cmd->add_option("--grid-size", o.grid_size, "angular grid points")->capture_default_str();
  cmd->add_option("--radius", o.radius, "scan radius in (0, 1]");
}

void add_output(CLI::App* cmd, Options& o, bool csv) {
  cmd->add_option("--out", o.out, "write the report to this file");
  if (csv) {
    cmd->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  }
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw ParameterError("cannot write " + o.out);
  file << text;
}

void emit_json(const Json& doc, const Options& o, std::ostream& out) {
  emit(doc.dump(2) + "\n", o, out);
}

Json params_config(const Options& o) { return io::params_to_json(o.params); }

// --- lemma -----------------------------------------------------------------

int cmd_lemma_gasper(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.l_max < 1) throw ParameterError("--lmax must be >= 1");
  const double tol = o.tolerance(1e-4);
  const ScanConfig scan = o.scan(1.0);
  const Json config{{"lmax", o.l_max},
                    {"tol", tol},
                    {"initial_bracket", {4.0, 5.0}},
                    {"scan", io::scan_to_json(scan)},
                    {"format", o.format}};
  try {
    const GasperEstimate estimate = estimate_best_constant(o.l_max, tol, scan);
    if (o.format == "csv") {
      emit(fmt::format("constant,lo,hi,critical_l,critical_theta\n{},{},{},{},{}\n",
                       io::format_double(estimate.constant), io::format_double(estimate.lo),
                       io::format_double(estimate.hi), estimate.critical_l,
                       io::format_double(estimate.critical_theta)),
           o, out);
    } else {
      emit_json(Json{{"command", "lemma gasper"},
                     {"config", config},
                     {"estimate", io::gasper_to_json(estimate)}},
                o, out);
    }
    return kOk;
  } catch (const BracketError& e) {
    err << "error: " << e.what() << "\n";
    emit_json(Json{{"command", "lemma gasper"}, {"config", config}, {"error", e.what()}}, o, out);
    return kBracket;
  }
}

int cmd_lemma_cosmin(const Options& o, std::ostream& out, std::ostream&) {
  if (o.l_max < 1) throw ParameterError("--lmax must be >= 1");
  for (double g : o.gammas) {
    if (!(g > -1.0)) throw ParameterError("--gamma must be > -1");
  }
  const ScanConfig scan = o.scan(1.0);
  Json rows = Json::array();
  std::string csv = std::string(io::kCosineCsvHeader) + "\n";
  for (double g : o.gammas) {
    const CosineSumMin found = cosine_sum_min(g, o.l_max, scan);
    rows.push_back(io::cosine_min_to_json(g, found));
    csv += fmt::format("{},{},{},{}\n", io::format_double(g), io::format_double(found.value),
                       found.l, io::format_double(found.theta));
  }
  if (o.format == "csv") {
    emit(csv, o, out);
  } else {
    emit_json(Json{{"command", "lemma cosmin"},
                   {"config",
                    {{"gammas", o.gammas}, {"lmax", o.l_max}, {"scan", io::scan_to_json(scan)}}},
                   {"rows", rows}},
              o, out);
  }
  return kOk;
}

int cmd_lemma_hull(const Options& o, std::ostream& out, std::ostream&) {
  const ScanConfig scan = o.scan(1.0);
  HullSampling sampling;
  sampling.tol = o.tolerance(1e-6);

  std::vector<std::pair<NormalizedSeries, NormalizedSeries>> pairs;
  Json config{{"scan", io::scan_to_json(scan)},
              {"sampling",
               {{"radii", sampling.radii},
                {"angles", sampling.angles},
                {"max_radius", sampling.max_radius}}},
              {"tol", sampling.tol}};
  if (!o.p_path.empty() || !o.q_path.empty()) {
    if (o.p_path.empty() || o.q_path.empty()) throw ParameterError("--p and --q go together");
    pairs.emplace_back(io::series_from_json(io::read_json_file(o.p_path)),
                       io::series_from_json(io::read_json_file(o.q_path)));
    config["p"] = o.p_path;
    config["q"] = o.q_path;
  } else {
    const int count = o.random > 0 ? o.random : 20;
    if (o.order < 2) throw ParameterError("--M must be >= 2");
    for (int i = 0; i < count; ++i) {
      Rng rng{o.seed, 0x68756c6cull, static_cast<std::uint64_t>(i)};
      const KernelSpec spec = random_kernel(rng);
      pairs.emplace_back(half_plane_kernel(spec, o.order), random_analytic(rng, o.order));
    }
    config["random"] = count;
    config["seed"] = o.seed;
    config["M"] = o.order;
  }

  Json reports = Json::array();
  bool ok = true;
  for (const auto& [p, q] : pairs) {
    const HullReport report = hull_membership_check(p, q, scan, sampling);
    if (report.status == HullStatus::checked && !report.pass) ok = false;
    reports.push_back(io::hull_to_json(report));
  }
  emit_json(Json{{"command", "lemma hull"}, {"config", config}, {"reports", reports}}, o, out);
  return ok ? kOk : kFail;
}

// --- classes ---------------------------------------------------------------

int cmd_classes_check(const Options& o, std::ostream& out, std::ostream&) {
  o.params.validate();
  const ScanConfig scan = o.scan(0.999);
  const double tol = o.tolerance(kDefaultMembershipTol);
  const NormalizedSeries f = io::series_from_json(io::read_json_file(o.input));
  const MembershipReport report = membership_infimum(f, o.params, scan, tol);
  emit_json(Json{{"command", "classes check"},
                 {"config",
                  {{"input", o.input},
                   {"params", params_config(o)},
                   {"scan", io::scan_to_json(scan)},
                   {"tol", tol}}},
                 {"report", io::membership_to_json(report)}},
            o, out);
  return report.is_member ? kOk : kFail;
}

int cmd_classes_generate(const Options& o, std::ostream& out, std::ostream&) {
  o.params.validate();
  if (o.order < 1) throw ParameterError("--M must be >= 1");
  const KernelSpec spec = o.kernel.empty() ? [&] {
    Rng rng{o.seed, 0x67656eull};
    return random_kernel(rng);
  }()
                                           : io::kernel_from_json(io::read_json_file(o.kernel));
  const Truncation mode = o.truncation == "plain" ? Truncation::plain : Truncation::fejer;
  Json doc = io::series_to_json(generate_member(spec, o.params, o.order, mode));
  Json config{{"params", params_config(o)}, {"M", o.order}, {"truncation", o.truncation}};
  if (o.kernel.empty()) {
    config["seed"] = o.seed;
  } else {
    config["kernel_file"] = o.kernel;
  }
  doc["kernel"] = io::kernel_to_json(spec);
  doc["config"] = config;
  emit_json(doc, o, out);
  return kOk;
}

// --- theorem ---------------------------------------------------------------

Json summary_of(const std::vector<VerificationReport>& reports, bool& all_ok) {
  int passed = 0;
  int applicable = 0;
  int errors = 0;
  for (const auto& r : reports) {
    if (r.error) ++errors;
    if (!r.pass) continue;
    ++applicable;
    if (*r.pass) ++passed;
  }
  all_ok = passed == applicable && errors == 0;
  return Json{{"pass", passed},
              {"applicable", applicable},
              {"errors", errors},
              {"total", reports.size()}};
}

void emit_reports(const std::string& command, Json config,
                  const std::vector<VerificationReport>& reports, const Json& summary,
                  const std::vector<std::string>& warnings, const Options& o, std::ostream& out) {
  if (o.format == "csv") {
    emit(io::reports_to_csv(reports), o, out);
    return;
  }
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(io::verification_to_json(r));
  Json doc{{"command", command},
           {"config", std::move(config)},
           {"reports", std::move(list)},
           {"summary", summary}};
  if (!warnings.empty()) doc["warnings"] = warnings;
  emit_json(doc, o, out);
}

int cmd_theorem_bound(const Options& o, std::ostream& out, std::ostream&) {
  o.params.validate();
  const double bound = theorem_bound(o.params);
  emit_json(Json{{"command", "theorem bound"},
                 {"config", {{"params", params_config(o)}}},
                 {"bound", bound},
                 {"nonnegativity_threshold", nonnegativity_threshold(o.params)},
                 {"bound_nonnegative", bound >= 0.0},
                 {"hypothesis_ok", o.params.hypothesis_ok()}},
            o, out);
  return kOk;
}

int cmd_theorem_verify(const Options& o, std::ostream& out, std::ostream& err) {
  o.params.validate();
  if (o.order < 2) throw ParameterError("--M must be >= 2");
  if (o.m < 2 || o.m > o.order) {
    throw ParameterError(fmt::format("--m must lie in [2, {}]", o.order));
  }
  const ScanConfig scan = o.scan(1.0);
  const double tol = o.tolerance(kTheoremTol);
  VerifyOptions options;
  options.check_membership = o.check_membership;

  Json config{{"params", params_config(o)},
              {"m", o.m},
              {"M", o.order},
              {"scan", io::scan_to_json(scan)},
              {"tol", tol},
              {"check_membership", o.check_membership}};

  std::vector<NormalizedSeries> members;
  if (!o.input.empty()) {
    members.push_back(io::series_from_json(io::read_json_file(o.input)));
    if (members.back().order() < o.m) throw ParameterError("input series is shorter than m");
    config["input"] = o.input;
  } else if (!o.kernel.empty()) {
    members.push_back(
        generate_member(io::kernel_from_json(io::read_json_file(o.kernel)), o.params, o.order));
    config["kernel_file"] = o.kernel;
  } else if (o.random > 0) {
    for (int i = 0; i < o.random; ++i) {
      members.push_back(generate_member(sweep_kernel(o.seed, 0, i), o.params, o.order));
    }
    config["random"] = o.random;
    config["seed"] = o.seed;
  } else {
    members.push_back(generate_member(KernelSpec::unit(), o.params, o.order));
    config["kernel"] = "unit";
  }

  std::vector<VerificationReport> reports;
  for (const auto& f : members) reports.push_back(verify_theorem(f, o.params, o.m, scan, tol, options));

  std::vector<std::string> warnings;
  if (!o.params.hypothesis_ok()) {
    warnings.emplace_back("alpha + c > 4.5678018: the lower bound is not claimed; reports are informational");
    err << "warning: " << warnings.back() << "\n";
  }
  bool all_ok = true;
  const Json summary = summary_of(reports, all_ok);
  emit_reports("theorem verify", config, reports, summary, warnings, o, out);
  return all_ok ? kOk : kFail;
}

int cmd_theorem_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  SweepConfig config = io::sweep_from_json(io::read_json_file(o.grid));
  config.order = o.order;
  config.scan = o.scan(1.0);
  config.tol = o.tolerance(kTheoremTol);
  const std::vector<VerificationReport> reports = sweep(config);

  bool all_ok = true;
  const Json summary = summary_of(reports, all_ok);
  err << fmt::format("pass {}/{} applicable, {} total\n", summary["pass"].get<int>(),
                     summary["applicable"].get<int>(), reports.size());
  const Json resolved{{"grid", o.grid},
                      {"cells", config.cells.size()},
                      {"spec_count", config.spec_count},
                      {"seed", config.seed},
                      {"M", config.order},
                      {"scan", io::scan_to_json(config.scan)},
                      {"tol", config.tol}};
  emit_reports("theorem sweep", resolved, reports, summary, {}, o, out);
  return all_ok ? kOk : kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Quasi-partial sums of the generalized Bernardi integral: numerical checks",
               "qpsum"};
  app.require_subcommand(1);

  auto* lemma = app.add_subcommand("lemma", "cosine-sum, real-part and convolution-hull checks");
  lemma->require_subcommand(1);
  auto* gasper = lemma->add_subcommand("gasper", "estimate the best cosine-sum constant");
  gasper->add_option("--lmax", o.l_max, "largest number of cosine terms")->capture_default_str();
  gasper->add_option("--tol", o.tol, "bracket width (default 1e-4)");
  add_scan(gasper, o);
  add_output(gasper, o, true);

  auto* cosmin = lemma->add_subcommand("cosmin", "minimum of the cosine sum for given gammas");
  cosmin->add_option("--gamma", o.gammas, "gamma > -1 (repeatable)")->required();
  cosmin->add_option("--lmax", o.l_max, "largest number of cosine terms")->capture_default_str();
  add_scan(cosmin, o);
  add_output(cosmin, o, true);

  auto* hull = lemma->add_subcommand("hull", "check that p*q stays in the hull of q");
  hull->add_option("--p", o.p_path, "series file for p (Re p > 1/2)");
  hull->add_option("--q", o.q_path, "series file for q");
  hull->add_option("--random", o.random, "number of random admissible pairs (default 20)");
  hull->add_option("--seed", o.seed, "random seed")->capture_default_str();
  hull->add_option("--M", o.order, "truncation order of random pairs")->capture_default_str();
  hull->add_option("--tol", o.tol, "outside-distance tolerance (default 1e-6)");
  add_scan(hull, o);
  add_output(hull, o, false);

  auto* classes = app.add_subcommand("classes", "class membership and member generation");
  classes->require_subcommand(1);
  auto* check = classes->add_subcommand("check", "test a series file for class membership");
  check->add_option("input", o.input, "series JSON for f(z)/z")->required();
  add_params(check, o);
  check->add_option("--tol", o.tol, "membership tolerance (default 1e-6)");
  add_scan(check, o);
  add_output(check, o, false);

  auto* generate = classes->add_subcommand("generate", "build a class member from a kernel");
  generate->add_option("--kernel", o.kernel, "kernel JSON (random kernel if omitted)");
  generate->add_option("--seed", o.seed, "seed for the random kernel")->capture_default_str();
  generate->add_option("--M", o.order, "truncation order")->capture_default_str();
  generate->add_option("--truncation", o.truncation, "fejer or plain")
      ->check(CLI::IsMember({"fejer", "plain"}))
      ->capture_default_str();
  add_params(generate, o);
  add_output(generate, o, false);

  auto* theorem = app.add_subcommand("theorem", "lower bound on quasi-partial sums");
  theorem->require_subcommand(1);
  auto* bound = theorem->add_subcommand("bound", "evaluate the lower bound");
  add_params(bound, o);
  add_output(bound, o, false);

  auto* verify = theorem->add_subcommand("verify", "verify the bound on class members");
  add_params(verify, o);
  verify->add_option("--m", o.m, "quasi-partial sum index, 2 <= m <= M")->required();
  verify->add_option("--M", o.order, "truncation order")->capture_default_str();
  auto* source = verify->add_option_group("source");
  source->add_option("--input", o.input, "series JSON for f(z)/z");
  source->add_option("--kernel", o.kernel, "kernel JSON");
  source->add_option("--random", o.random, "number of seeded random kernels");
  source->require_option(0, 1);
  verify->add_option("--seed", o.seed, "random seed")->capture_default_str();
  verify->add_option("--tol", o.tol, "margin tolerance (default 1e-6)");
  verify->add_flag("--check-membership", o.check_membership, "also scan the class condition");
  add_scan(verify, o);
  add_output(verify, o, true);

  auto* sweep_cmd = theorem->add_subcommand("sweep", "verify over a parameter grid");
  sweep_cmd->add_option("--grid", o.grid, "grid JSON")->required();
  sweep_cmd->add_option("--M", o.order, "truncation order")->capture_default_str();
  sweep_cmd->add_option("--tol", o.tol, "margin tolerance (default 1e-6)");
  add_scan(sweep_cmd, o);
  add_output(sweep_cmd, o, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (gasper->parsed()) return cmd_lemma_gasper(o, out, err);
    if (cosmin->parsed()) return cmd_lemma_cosmin(o, out, err);
    if (hull->parsed()) return cmd_lemma_hull(o, out, err);
    if (check->parsed()) return cmd_classes_check(o, out, err);
    if (generate->parsed()) return cmd_classes_generate(o, out, err);
    if (bound->parsed()) return cmd_theorem_bound(o, out, err);
    if (verify->parsed()) return cmd_theorem_verify(o, out, err);
    if (sweep_cmd->parsed()) return cmd_theorem_sweep(o, out, err);
  } catch (const FormatError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputFormat;
  } catch (const BracketError& e) {
    err << "error: " << e.what() << "\n";
    return kBracket;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  err << "usage error: no command\n";
  return kUsage;
}

}  // namespace qps::cli
