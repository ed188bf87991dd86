#include "qps/io.hpp"

#include <fmt/format.h>

#include <fstream>
#include <sstream>

#include "qps/errors.hpp"

namespace qps::io {

namespace {

const Json& member(const Json& doc, const std::string& key, const std::string& where) {
  if (!doc.is_object()) throw FormatError(where, "expected an object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw FormatError(where + "." + key, "missing");
  return *it;
}

double number(const Json& doc, const std::string& key, const std::string& where) {
  const Json& v = member(doc, key, where);
  if (!v.is_number()) throw FormatError(where + "." + key, "expected a number");
  return v.get<double>();
}

long long integer(const Json& doc, const std::string& key, const std::string& where) {
  const Json& v = member(doc, key, where);
  if (!v.is_number_integer()) throw FormatError(where + "." + key, "expected an integer");
  return v.get<long long>();
}

const Json& array(const Json& doc, const std::string& key, const std::string& where) {
  const Json& v = member(doc, key, where);
  if (!v.is_array()) throw FormatError(where + "." + key, "expected an array");
  return v;
}

Json complex_to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const Json& doc, const std::string& where) {
  return {number(doc, "re", where), number(doc, "im", where)};
}

std::string indexed(const std::string& where, const std::string& key, std::size_t i) {
  return where + "." + key + "[" + std::to_string(i) + "]";
}

}  // namespace

Json series_to_json(const NormalizedSeries& u) {
  Json coeffs = Json::array();
  for (const Complex& b : u.coeffs()) coeffs.push_back(complex_to_json(b));
  return Json{{"M", u.order()}, {"coeffs", std::move(coeffs)}};
}

NormalizedSeries series_from_json(const Json& doc) {
  const std::string where = "series";
  const long long order = integer(doc, "M", where);
  if (order < 1 || order > (1 << 20)) throw FormatError(where + ".M", "must lie in [1, 2^20]");
  const Json& list = array(doc, "coeffs", where);
  if (list.size() != static_cast<std::size_t>(order - 1)) {
    throw FormatError(where + ".coeffs", "expected " + std::to_string(order - 1) +
                                             " entries, got " + std::to_string(list.size()));
  }
  std::vector<Complex> coeffs;
  coeffs.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    coeffs.push_back(complex_from_json(list[i], indexed(where, "coeffs", i)));
  }
  return NormalizedSeries(std::move(coeffs), static_cast<int>(order));
}

Json params_to_json(const ClassParams& params) {
  return Json{{"n", params.n}, {"alpha", params.alpha}, {"beta", params.beta}, {"c", params.c}};
}

ClassParams params_from_json(const Json& doc, const std::string& where) {
  ClassParams params;
  const long long n = integer(doc, "n", where);
  if (n < 0 || n > 1000) throw FormatError(where + ".n", "must lie in [0, 1000]");
  params.n = static_cast<int>(n);
  params.alpha = number(doc, "alpha", where);
  params.beta = number(doc, "beta", where);
  params.c = number(doc, "c", where);
  try {
    params.validate();
  } catch (const ParameterError& e) {
    throw FormatError(where, e.what());
  }
  return params;
}

Json kernel_to_json(const KernelSpec& spec) {
  Json points = Json::array();
  for (const Complex& x : spec.points()) points.push_back(complex_to_json(x));
  return Json{{"points", std::move(points)}, {"weights", spec.weights()}};
}

KernelSpec kernel_from_json(const Json& doc) {
  const std::string where = "kernel";
  const Json& pts = array(doc, "points", where);
  const Json& wts = array(doc, "weights", where);
  std::vector<Complex> points;
  std::vector<double> weights;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    points.push_back(complex_from_json(pts[i], indexed(where, "points", i)));
  }
  for (std::size_t i = 0; i < wts.size(); ++i) {
    if (!wts[i].is_number()) throw FormatError(indexed(where, "weights", i), "expected a number");
    weights.push_back(wts[i].get<double>());
  }
  try {
    return KernelSpec(std::move(points), std::move(weights));
  } catch (const ConstructionError& e) {
    throw FormatError(where, e.what());
  }
}

Json scan_to_json(const ScanConfig& scan) {
  return Json{{"grid_size", scan.grid_size},
              {"refine_tol", scan.refine_tol},
              {"radius", scan.radius}};
}

Json membership_to_json(const MembershipReport& report) {
  return Json{{"infimum", report.infimum},
              {"argmin_angle", report.argmin_angle},
              {"beta_threshold", report.beta_threshold},
              {"tol", report.tol},
              {"is_member", report.is_member}};
}

Json gasper_to_json(const GasperEstimate& estimate) {
  return Json{{"constant", estimate.constant},
              {"bracket", {estimate.lo, estimate.hi}},
              {"critical_l", estimate.critical_l},
              {"critical_theta", estimate.critical_theta},
              {"critical_value", estimate.critical_value},
              {"iterations", estimate.iterations}};
}

Json cosine_min_to_json(double gamma, const CosineSumMin& found) {
  return Json{{"gamma", gamma},
              {"min", found.value},
              {"argmin_l", found.l},
              {"argmin_theta", found.theta}};
}

Json hull_to_json(const HullReport& report) {
  return Json{{"status", report.status == HullStatus::checked ? "checked" : "vacuous"},
              {"p_min_re", report.p_min_re},
              {"max_outside", report.max_outside},
              {"hull_vertices", report.hull_vertices},
              {"samples", report.samples},
              {"tol", report.tol},
              {"pass", report.pass}};
}

Json verification_to_json(const VerificationReport& report) {
  Json doc{{"params", params_to_json(report.params)},
           {"m", report.m},
           {"M", report.order},
           {"bound", report.bound},
           {"observed_min", report.observed_min},
           {"argmin_angle", report.argmin_angle},
           {"margin", report.margin},
           {"tol", report.tol},
           {"hypothesis_ok", report.hypothesis_ok},
           {"pass", report.pass ? Json(*report.pass) : Json("not-applicable")},
           {"factorization_residual", report.factorization_residual},
           {"diagnostics", report.diagnostics}};
  if (report.error) {
    doc["pass"] = "error";
    doc["error"] = *report.error;
  }
  return doc;
}

SweepConfig sweep_from_json(const Json& doc) {
  const std::string where = "grid";
  SweepConfig config;
  const Json& cells = array(doc, "cells", where);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string cell_where = indexed(where, "cells", i);
    SweepCell cell;
    cell.params = params_from_json(member(cells[i], "params", cell_where), cell_where + ".params");
    cell.m = static_cast<int>(integer(cells[i], "m", cell_where));
    config.cells.push_back(cell);
  }
  const long long count = integer(doc, "spec_count", where);
  if (count < 1) throw FormatError(where + ".spec_count", "must be >= 1");
  config.spec_count = static_cast<int>(count);
  const Json& seed = member(doc, "seed", where);
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
    throw FormatError(where + ".seed", "expected an integer");
  }
  config.seed = seed.get<std::uint64_t>();
  return config;
}

std::string format_double(double value) { return fmt::format("{:.17g}", value); }

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::string out = std::string(kReportCsvHeader) + "\n";
  for (const auto& r : reports) {
    const char* pass = r.error ? "error" : r.pass ? (*r.pass ? "true" : "false") : "n/a";
    out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", r.params.n,
                       format_double(r.params.alpha), format_double(r.params.beta),
                       format_double(r.params.c), r.m, format_double(r.bound),
                       format_double(r.observed_min), format_double(r.margin),
                       format_double(r.factorization_residual), pass);
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path, "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path, e.what());
  }
}

}  // namespace qps::io
