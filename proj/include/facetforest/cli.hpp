#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace facetforest {

// Runs the command-line interface against explicit streams (argv without the
// program name). Returns the process exit code: 0 on success, 1 when a check
// or comparison the command performed came out negative, 2 on usage, parse,
// or precondition errors. `in` substitutes for stdin when reading "-".
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream* in = nullptr);

}  // namespace facetforest
