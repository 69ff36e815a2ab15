#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramify::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// args excludes the program name. JSON or CSV goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramify::cli
