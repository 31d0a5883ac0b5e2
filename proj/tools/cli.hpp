#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gdeck::cli {

/// Exit statuses: 0 success / property holds, 1 property does not hold,
/// 2 usage or computation error.
enum ExitStatus : int { kOk = 0, kFalse = 1, kUsage = 2 };

/// Parse `args` (without the program name) and run the selected command.
/// Results go to `out`, diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gdeck::cli
