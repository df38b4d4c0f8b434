#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqcomp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Relative --out paths are resolved under this directory when it is set.
inline constexpr const char* kOutDirEnv = "SQCOMP_OUT_DIR";

// args excludes the program name. Reports go to `out` unless --out is
// given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqcomp::cli
