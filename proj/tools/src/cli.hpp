#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinrsk::cli {

enum ExitCode : int { ok = 0, verify_failed = 1, usage_error = 2 };

// Runs one command line (without the program name).  Input files named "-"
// are read from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace spinrsk::cli
