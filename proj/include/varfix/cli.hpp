#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace varfix {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failed = 1;
inline constexpr int config_error = 2;
inline constexpr int blowup = 3;
} // namespace exit_code

/**
 * Runs `varfix <command> [options]` with args excluding the program name.
 * Reports go to --output or `out`; diagnostics go to `err`.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace varfix
