#pragma once

#include <ostream>

namespace beltrami {

inline constexpr const char* artifact_version = "0.1.0";

// Exit codes shared by all subcommands.
enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1, // also: cascade verdict ObstructionInconclusive
    exit_bad_input = 2,
};

/// Entry point of the command-line tool. Reports go to `out`, diagnostics
/// to `err`; the return value is the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace beltrami
