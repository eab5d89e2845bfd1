#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qsp::cli {

/// Exit statuses of run().
enum Status : int { ok = 0, check_failed = 1, bad_input = 2 };

/// Runs one command; args excludes the program name. Nothing is written to
/// `out` when the result is bad_input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsp::cli
