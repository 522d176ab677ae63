#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace asymada {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitData = 3,
  kExitIdentity = 4,
};

// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "ASYMADA_OUT_DIR";

// Runs the command line `args` (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asymada
