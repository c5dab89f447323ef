#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chromstab::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kUsage = 2,
  kPrecondition = 3,
};

/// Runs one command line (arguments after the program name). Payload goes
/// to `out`, diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace chromstab::cli
