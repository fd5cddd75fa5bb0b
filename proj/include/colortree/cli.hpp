#ifndef COLORTREE_CLI_HPP
#define COLORTREE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace colortree::cli {

// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,   // a verification or isolation check found a counterexample
    kBadInput = 2,      // malformed arguments, shapes, encodings, or domain errors
    kBudget = 3,        // a configured cap would be exceeded
    kNumeric = 4,       // root finding, convergence, or integrality failure
};

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`; the return value is an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace colortree::cli

#endif  // COLORTREE_CLI_HPP
