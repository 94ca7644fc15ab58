#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coxstar {

/// Runs the command line given argv-style arguments (without the program
/// name). Reports go to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 usage/parse error, 2 verification failure,
/// 3 internal-mismatch alarm.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxstar
