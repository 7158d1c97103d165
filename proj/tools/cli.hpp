#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace onethree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

// Runs one command line (args excludes the program name). JSON and CSV go to
// out, diagnostics to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace onethree::cli
