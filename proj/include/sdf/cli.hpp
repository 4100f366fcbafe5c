#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdf::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;  // a verification ran and reported a failure
inline constexpr int kUsage = 2;   // bad flags or invalid input

/// Runs one sdfkit command. args[0] is the program name. Data goes to `out`
/// in a single write, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sdf::cli
