#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace inscribe::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 usage error, 2 domain error, 3 search found no witness.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace inscribe::cli
