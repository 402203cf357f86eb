#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace invcurve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the invcurve tool; args excludes the program name. Returns the
// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invcurve::cli
