#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lbpc {

// Exit codes of the command line front end.
enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitInfeasible = 2, kExitDisagreement = 3 };

// Parses `args` (without the program name) and runs `solve` or `bench`.
// A weights path of "-" reads from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// One weight per line; '#' starts a comment; blank lines are skipped.
// Throws InvalidInput naming the offending line.
std::vector<double> read_weights(std::istream& in);

}  // namespace lbpc
