#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace taft::cli {

/// Exit codes: 0 success, 2 validation failure (bad input, failed check,
/// budget refusal), 1 internal error. Data goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Writes the shipped fixture corpus into dir; returns the file names.
std::vector<std::string> write_fixtures(const std::string& dir);

}  // namespace taft::cli
