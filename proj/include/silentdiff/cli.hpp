#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace silentdiff::cli {

inline constexpr int kExitClean = 0;
inline constexpr int kExitFatal = 1;
inline constexpr int kExitDiagnostics = 2;

/// Runs one `silentdiff` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace silentdiff::cli
