#ifndef LGRAPH_TOOLS_CLI_HPP
#define LGRAPH_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lgraph::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kParseError = 2,
  kPrecondition = 3,
  kUnknown = 4,
};

/// Runs the lgraph command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgraph::cli

#endif  // LGRAPH_TOOLS_CLI_HPP
