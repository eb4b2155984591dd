#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace supercong::cli {

enum ExitCode { kOk = 0, kFailed = 1, kUsage = 2, kIo = 3 };

/// Runs the command line. args excludes the program name; an empty list or
/// one starting with a flag means "verify".
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace supercong::cli
