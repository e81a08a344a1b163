#pragma once

#include <iosfwd>

namespace simonq::cli {

// Exit codes, documented in the README and --help text.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;      // unexpected internal error
inline constexpr int kExitUsage = 2;        // bad command line
inline constexpr int kExitParameter = 3;    // invalid cipher/gate parameters
inline constexpr int kExitFile = 4;         // missing or malformed input file
inline constexpr int kExitResource = 5;     // width cap or similar limit hit
inline constexpr int kExitVerifyFailed = 6; // verification found a mismatch

/// Run the command line against explicit streams (testable entry point;
/// main() forwards to this with std::cout/std::cerr).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace simonq::cli
