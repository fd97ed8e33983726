#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "locbez/bezout.hpp"

namespace locbez::cli {

enum ExitCode : int {
  kPass = 0,
  kInputError = 1,
  kVerdictFailure = 2,
  kResourceExhausted = 3,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The report as a JSON object (keys field, f, g, e, ..., verdicts, stabilization).
std::string report_json(const BezoutReport& report, int indent = -1);

}  // namespace locbez::cli
