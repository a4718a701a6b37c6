#pragma once

#include "monicrep/io.hpp"

#include <string>
#include <vector>

namespace monicrep::cli {

// Exit codes: 0 positive verdict, 1 negative, 2 input/precondition error,
// 3 bounded-only verdict.
struct CommandResult {
    int exit_code = 0;
    io::json report;
    std::string text;
};

// Full dispatch for: check-monic, check-gp, algebra-info, quiver-tensor,
// coker-phi, suite. Deterministic given (inputs, bound, seed).
CommandResult run_command(const std::vector<std::string>& args);

} // namespace monicrep::cli
