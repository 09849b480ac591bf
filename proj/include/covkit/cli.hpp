#pragma once

#include <ostream>

namespace covkit {

/// Exit codes of the command-line tool.
namespace exit_code {
inline constexpr int coverable = 0;
inline constexpr int not_coverable = 1;
inline constexpr int inconclusive = 2;
inline constexpr int usage = 64;
inline constexpr int data_error = 65;
inline constexpr int no_input = 66;
}  // namespace exit_code

/// Runs one `covkit` invocation. Reports go to `out`, diagnostics to `err`.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace covkit
