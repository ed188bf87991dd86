#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qps::cli {

enum ExitCode : int {
  kOk = 0,
  kFail = 1,
  kBracket = 2,
  kUsage = 64,
  kInputFormat = 65,
};

/// Runs the `qpsum` command line. `args` excludes the program name. Reports
/// go to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qps::cli
