#pragma once

#include <atomic>
#include <ostream>
#include <string>
#include <vector>

namespace alexmod {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_input_error = 1,
  exit_inconsistent = 2,  // bound violation or expected-value mismatch
  exit_resource = 3,      // minor or window cap, or cancellation
};

/// Runs the tool on `args` (without the program name). Data goes to `out`,
/// diagnostics and progress to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::atomic<bool>* cancel = nullptr);

}  // namespace alexmod
