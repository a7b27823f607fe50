#pragma once

#include <ostream>

namespace sectorlab::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNonConvergence = 2,
  kHypothesisViolation = 3,
  kCounterexample = 4,
};

/// Entry point of the sectorlab tool. Never throws; every failure maps to an exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sectorlab::cli
