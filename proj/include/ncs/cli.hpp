#ifndef NCS_CLI_HPP
#define NCS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ncs {

// Entry point behind the command-line tool.  Exit codes: 0 success,
// 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ncs

#endif  // NCS_CLI_HPP
