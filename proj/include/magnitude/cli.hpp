#pragma once

#include <ostream>

namespace magnitude::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNumericalError = 3;

/// Built-in default unless MAGNITUDE_DEFAULT_TOL holds a positive number.
double default_tolerance(double builtin);

/// Entry point of the `magnitude` tool. Results go to `out` as CSV; usage
/// and failures go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace magnitude::cli
