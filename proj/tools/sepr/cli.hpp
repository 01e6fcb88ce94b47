#pragma once

#include <ostream>

namespace sepr::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitBadInput = 3;

/// Runs one `sepr` invocation. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sepr::cli
