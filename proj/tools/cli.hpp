#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace swaptest::cli {

/// Runs one CLI invocation (args exclude the program name). Reports go to
/// out, diagnostics to err. Exit status: 0 success, 1 verification
/// failure, 2 usage or configuration error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace swaptest::cli
