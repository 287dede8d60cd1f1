#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace termirial::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kIdentityFailure = 1,
    kUsage = 2,
    kGuard = 3,
};

/// Runs one invocation. `args` excludes the program name. Reads loop
/// programs from `in` when no file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace termirial::cli
