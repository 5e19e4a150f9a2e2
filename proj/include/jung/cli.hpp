#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jung::cli {

enum ExitCode : int { kOk = 0, kRejected = 1, kUsage = 2 };

// args excludes the program name. Never throws for user input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jung::cli
