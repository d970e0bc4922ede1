#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thrackle {

// Runs one CLI invocation (argv without the program name).  Exit code 0 on
// success, 1 on verification failure, 2 on usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thrackle
