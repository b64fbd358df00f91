#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bhdeco::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bhdeco::cli
