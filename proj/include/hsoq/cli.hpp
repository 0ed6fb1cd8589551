#ifndef HSOQ_CLI_HPP
#define HSOQ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hsoq {

/// Runs the command-line surface on the given arguments (without argv[0]).
/// Exit codes: 0 success, 1 verification failure, 2 usage or range error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hsoq

#endif
