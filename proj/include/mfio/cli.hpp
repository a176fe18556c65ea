#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mfio {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNoClique = 2,
};

/// Runs the `mfio` command line (arguments exclude the program name).
/// Subcommands: mine, gen, bench, scaling.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mfio
