#pragma once

// Command-line front end. Exit codes: 0 certified or ok, 1 usage or parse
// error, 2 unknown or inconclusive, 3 falsified, 4 infeasible parameters.

#include <iosfwd>
#include <string>
#include <vector>

namespace suitable {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_unknown = 2,
    exit_falsified = 3,
    exit_infeasible = 4,
};

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace suitable
