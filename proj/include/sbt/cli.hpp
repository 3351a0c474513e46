#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sbt {

enum ExitCode : int { kExitOk = 0, kExitParse = 1, kExitValidation = 2, kExitConsistency = 3 };

/// Runs the command line front end; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sbt
