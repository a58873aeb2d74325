#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "reconf/rules.hpp"

namespace reconf::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kInvariantFailure = 3 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Moves as a JSON array of {"op","v"[,"u"]} objects.
std::string sequence_to_json(const std::vector<Move>& moves);
std::vector<Move> sequence_from_json(std::string_view text);

}  // namespace reconf::cli
