#pragma once

#include <ostream>

namespace fte::cli {

/// Exit codes: 0 success, 1 a verification check failed, 2 input or usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Entry point of the fte tool with injectable streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fte::cli
