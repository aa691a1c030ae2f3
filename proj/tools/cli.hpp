#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reslab {

/// Entry point of the `reslab` command line tool. `args` excludes the program
/// name. Returns 0 iff the requested command completed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reslab
