#ifndef SZEGO_TOOLS_CLI_HPP_
#define SZEGO_TOOLS_CLI_HPP_

// Command-line front end.  run() holds all the logic so the test suite can
// drive it in-process; main() only forwards argv.

#include <iosfwd>
#include <string>
#include <vector>

namespace szego::cli {

enum ExitCode : int {
    ok = 0,
    config_error = 2,
    numeric_failure = 3,
    bound_breached = 4,
};

// args excludes the program name.  Results go to --out (or `out` when no
// path is given); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace szego::cli

#endif  // SZEGO_TOOLS_CLI_HPP_
