#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twoway::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kValidationFailure = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err` as single lines.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace twoway::cli
