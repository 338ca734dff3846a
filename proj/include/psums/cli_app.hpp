#ifndef PSUMS_CLI_APP_HPP
#define PSUMS_CLI_APP_HPP

#include <ostream>

namespace psums {

// The full command-line front end. Returns the process exit code:
//   0  success
//   1  usage or domain error (message on the error stream)
//   2  internal invariant violation, or a failed verification check
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace psums

#endif
