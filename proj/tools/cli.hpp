#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sq::cli {

enum ExitCode : int {
    ok = 0,
    invalid_layout = 1,
    input_error = 2,
    budget_exceeded = 3,
    insufficient_scale = 4,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sq::cli
