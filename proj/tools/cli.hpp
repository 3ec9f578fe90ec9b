#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zipod::cli {

// Runs one CLI invocation (args exclude the program name) writing normal
// output to `out` and diagnostics to `err`. Returns the process exit code:
// 0 success, 1 domain/validation error, 2 parse error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace zipod::cli
