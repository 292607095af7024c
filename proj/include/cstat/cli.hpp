#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cstat {

enum ExitCode { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2, kExitResource = 3 };

/// Runs the command line tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cstat
