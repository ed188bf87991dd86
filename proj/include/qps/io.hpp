#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qps/classes.hpp"
#include "qps/lemmas.hpp"
#include "qps/operators.hpp"
#include "qps/scan.hpp"
#include "qps/series.hpp"
#include "qps/theorem.hpp"

// JSON documents exchanged by the command-line tool. Readers throw
// FormatError naming the offending field; unknown keys are ignored.

namespace qps::io {

using Json = nlohmann::ordered_json;

/// {"M": int, "coeffs": [{"re": float, "im": float}, ...]} with coeffs b_2..b_M.
Json series_to_json(const NormalizedSeries& u);
NormalizedSeries series_from_json(const Json& doc);

/// {"n": int, "alpha": float, "beta": float, "c": float}; validated on load.
Json params_to_json(const ClassParams& params);
ClassParams params_from_json(const Json& doc, const std::string& where = "params");

/// {"points": [{"re", "im"}], "weights": [...]}.
Json kernel_to_json(const KernelSpec& spec);
KernelSpec kernel_from_json(const Json& doc);

Json scan_to_json(const ScanConfig& scan);
Json membership_to_json(const MembershipReport& report);
Json gasper_to_json(const GasperEstimate& estimate);
Json cosine_min_to_json(double gamma, const CosineSumMin& found);
Json hull_to_json(const HullReport& report);
Json verification_to_json(const VerificationReport& report);

/// Sweep grid {"cells": [{"params": {...}, "m": int}], "spec_count": int, "seed": int}.
/// Fills cells, spec_count and seed of a SweepConfig; the rest keeps defaults.
SweepConfig sweep_from_json(const Json& doc);

inline constexpr const char* kReportCsvHeader =
    "n,alpha,beta,c,m,bound,observed_min,margin,residual,pass";

/// One CSV row per report, columns as in kReportCsvHeader; the pass column
/// holds true, false, n/a (hypothesis violated) or error.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

inline constexpr const char* kCosineCsvHeader = "gamma,min,argmin_l,argmin_theta";

/// Formats with 17 significant digits.
std::string format_double(double value);

/// Parses a JSON file; FormatError carries the path on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace qps::io
