#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diffseq::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitCapacity = 2;
inline constexpr int kExitMalformed = 3;
inline constexpr int kExitUsage = 64;

/// Runs one command line (without the program name). Output that a run
/// produces depends only on the arguments and the files they name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diffseq::cli
