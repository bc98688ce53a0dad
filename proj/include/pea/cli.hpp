#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pea {

/// Exit statuses of the command-line front end.
enum ExitStatus : int {
  kExitOk = 0,
  kExitDomain = 1,     // invalid algebra, arguments or resource bound
  kExitInvariant = 2,  // a structural theorem failed on the input
};

/// Runs one command; `args` excludes the program name. Human-readable
/// lines go to `out`, each followed where useful by a machine line starting
/// with "@ ". Errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pea
