#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kzaut {

/// Exit codes of the kzaut command.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitVerifyFailed = 2,
  kExitWild = 3,
  kExitNotAutomorphism = 4,
  kExitNoTranscript = 5,
};

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kzaut
