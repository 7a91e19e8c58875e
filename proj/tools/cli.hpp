// Command-line front end, separated from main() so tests can drive it
// in-process. Returns the process exit code: 0 success, 1 domain failure
// (including a strategy that fails validation), 2 usage errors.
#ifndef NETSWEEP_CLI_HPP
#define NETSWEEP_CLI_HPP

#include <iosfwd>

namespace netsweep {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace netsweep

#endif  // NETSWEEP_CLI_HPP
