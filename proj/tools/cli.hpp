// Command-line front end, callable in-process for tests.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plog::cli {

enum ExitCode : int { kSuccess = 0, kRefuted = 1, kUsage = 2, kInconclusive = 3 };

/// args excludes the program name. Output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plog::cli
