#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vda::cli {

enum ExitCode : int { Success = 0, DomainError = 1, UsageError = 2 };

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vda::cli
