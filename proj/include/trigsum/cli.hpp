#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trigsum {

/// Process exit codes of the command-line tool.
namespace exit_code {
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;          ///< refuted identity or failed suite case
inline constexpr int kInconclusive = 2;  ///< also used for runtime errors
inline constexpr int kUsage = 64;
inline constexpr int kParse = 65;
}  // namespace exit_code

/// Runs one command line (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trigsum
