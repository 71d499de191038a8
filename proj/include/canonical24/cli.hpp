#pragma once

#include <iosfwd>

namespace canonical24 {

inline constexpr const char* kLibraryVersion = "0.1.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,      // bad arguments, I/O failure or malformed input
    kExitExhausted = 2,  // sampling ran out of tries
    kExitCheckFailed = 3,
    kExitUncertified = 4,
};

/// Entry point of the canonical24 tool: sample, verify, ring, probe, numerology.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace canonical24
