#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace circles::cli {

// Runs the command line (args excludes the program name).  Returns the exit
// status: 0 success or a true verdict, 1 a false verdict, 2 an error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circles::cli
