#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bnclass::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitUnsupported = 3;
inline constexpr int kExitIo = 4;
inline constexpr int kExitSchema = 5;

/// Runs one command line (args excludes the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bnclass::cli
