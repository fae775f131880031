#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sublat::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kResource = 3,
  kTheoremFailure = 4,
  kInternal = 5,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`;
/// diagnostics go to `err` as one JSON object per line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sublat::cli
