#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlab {

// The engine behind the qlab binary. `args` is argv without the program
// name. Returns the process exit code: 0 on success (and for --help), 1 on
// domain errors (a certificate that cannot exist, an exhausted search, a
// failing gem check), 2 on usage errors and malformed set descriptions.
int run_subcommand(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err);

}  // namespace qlab
