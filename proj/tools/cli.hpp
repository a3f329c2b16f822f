#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace covermeasure::cli {

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 2 on a usage error and 1 on
/// a computation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covermeasure::cli
