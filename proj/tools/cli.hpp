#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hookcontent/sweep.hpp"

namespace hookcontent::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDisagreement = 2,
};

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Body of `verify`: prints one row per check and a summary; kDisagreement if
/// any check failed.
int run_verify(const SweepOptions& options, std::ostream& out);

}  // namespace hookcontent::cli
