#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qeuler::cli {

/// Process exit statuses.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kIoOrFormat = 3,
    kBudgetExceeded = 4,
};

/// Environment variable naming the default cache file.
inline constexpr const char* kCachePathEnv = "QEULER_CACHE_PATH";

/// Runs the command line `args` (without the program name), writing to `out` and `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qeuler::cli
