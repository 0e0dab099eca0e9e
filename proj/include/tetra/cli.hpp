#pragma once

// Command-line driver. Kept in the library so tests can run it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace tetra::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBenchMismatch = 3;

// Overrides the default suite seed when set to an unsigned integer.
inline constexpr const char* kSeedEnv = "TETRANACCI_SEED";

// args excludes the program name. Returns the process exit status.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tetra::cli
