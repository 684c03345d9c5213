#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fcgs_cli {

// Runs the command line `args` (args[0] is the program name). Returns the
// process exit code: 0 ok, 2 usage, 3 I/O, 4 data validation, 5 numeric.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fcgs_cli
