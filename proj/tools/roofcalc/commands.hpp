#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "roofcalc/errors.hpp"

namespace roofcalc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kPrecondition = 3,
  kAmbiguity = 4,
  kMismatch = 5,
};

int exit_code(ErrorKind kind);

/// Runs one invocation. args excludes the program name. Everything is
/// buffered and written once, to `out` or to the --out file.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace roofcalc::cli
