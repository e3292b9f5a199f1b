#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace moshinsky::cli {

enum ExitCode : int { kSuccess = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

/// Runs `eval`, `sweep` or `verify`. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moshinsky::cli
