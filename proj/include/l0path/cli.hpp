#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace l0path::cli {

// Runs the command line tool on `args` (without the program name). Input
// files named "-" are read from `in`. Returns the process exit code: 0 on
// success, 1 on I/O failure, 2 on usage or validation errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace l0path::cli
