#pragma once

#include <iosfwd>

namespace illusion::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNoOrInvalid = 1;
inline constexpr int kInfeasible = 2;
inline constexpr int kInputError = 3;
inline constexpr int kSizeGuard = 4;

// Entry point behind the illusion binary. All diagnostics go to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace illusion::cli
