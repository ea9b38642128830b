#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kswitch::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kRuntimeFailure = 1,
    kConfigError = 2,
    kBudgetExceeded = 3,
    kPropertyViolated = 4,
};

/// Run the tool on argv-style arguments (args[0] is the program name).
/// Results go to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kswitch::cli
