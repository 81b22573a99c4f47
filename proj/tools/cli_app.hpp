#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tupledom::cli {

// Runs the command line given as argv-style words (program name excluded).
// Exit codes: 0 success, 1 usage/parse error, 2 infeasible or mismatch.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tupledom::cli
