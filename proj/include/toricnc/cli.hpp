#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricnc {

/// Runs the command-line front end on argv-style arguments (program name
/// excluded). Results go to `out`, diagnostics and timing to `err`.
/// Exit code: 0 success, 1 verification or internal-consistency failure,
/// 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricnc
