#pragma once

#include <ostream>

namespace phyllo {

// Exit codes of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_anomaly = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace phyllo
