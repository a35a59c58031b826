#ifndef POLLCTL_CLI_HPP
#define POLLCTL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pollctl {

// Runs one CLI invocation (args without the program name).  Reports go to
// `out` as JSON, error lines to `err`.  Exit codes: 0 YES/pass, 1 NO/fail,
// 2 UNKNOWN, 10+ structured errors (10 + error code).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pollctl

#endif
