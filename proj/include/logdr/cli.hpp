#ifndef LOGDR_CLI_HPP
#define LOGDR_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace logdr {

// Runs one CLI invocation. Returns the process exit code:
//   0 success, 1 validation/usage error, 2 internal invariant failure.
int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace logdr

#endif
