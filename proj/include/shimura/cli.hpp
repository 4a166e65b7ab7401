#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace shimura {

inline constexpr const char* kToolName = "shimura";
inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one command-line invocation (args exclude the program name).
/// Exit codes: 0 ok, 1 verification failure or computation error,
/// 2 usage error, 3 degenerate fallback.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace shimura
