#ifndef MULTICAT_CLI_HPP
#define MULTICAT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mcat {

// Dispatches one CLI invocation. Returns the process exit status:
// 0 positive verdict / successful computation, 1 negative verdict, 2 error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace mcat

#endif
