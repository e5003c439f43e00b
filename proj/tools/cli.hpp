#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torelli::cli {

/// Runs one command. `args` excludes the program name. Returns the exit
/// status: 0 success, 1 domain error, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torelli::cli
