#pragma once

#include <string>
#include <vector>

namespace aracert::cli {

/// Runs the command line given the arguments after the program name.
/// Exit codes: 0 success (certify: equality certified; sv-check: all checks
/// pass), 1 a gap or failed check remains, 2 input or usage error.
int run(const std::vector<std::string>& args);

}  // namespace aracert::cli
