#ifndef MSPG_TOOLS_CLI_H_
#define MSPG_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace mspg::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kViolations = 1,
  kConfigError = 2,
  kIoError = 3,
};

/// Runs the tool on `args` (without the program name), printing to `out`
/// and `err`. Returns the process exit code.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

}  // namespace mspg::cli

#endif  // MSPG_TOOLS_CLI_H_
