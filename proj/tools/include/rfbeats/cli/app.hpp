#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rfbeats::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitPhysicsError = 2;

/// Full command-line entry point. `args` excludes the program name. Output
/// goes to `out` unless --output names a file; diagnostics go to `err` as
/// "error: <Kind>: <message>".
int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rfbeats::cli
