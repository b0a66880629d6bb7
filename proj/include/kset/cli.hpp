#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kset {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kVerdictFailed = 1;
inline constexpr int kInputError = 2;
}  // namespace exit_code

/// Subcommands gen, analyze, verify, sweep and plot. `args` excludes the
/// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kset
