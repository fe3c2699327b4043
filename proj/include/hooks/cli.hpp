#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace hooks::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

// Entry point shared by the `hooks` binary and the tests. args[0] is the
// program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hooks::cli
