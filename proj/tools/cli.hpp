#pragma once

#include <iosfwd>

namespace chroma::cli {

/// Exit codes of the chroma tool.
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;  // infeasible or invalid instance, failed check
inline constexpr int kUsage = 2;    // parse or usage error

/// Runs the tool. Results go to `out` unless -o is given; diagnostics go
/// to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chroma::cli
