#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cohesion::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kBadInput = 2 };

// Runs one command line (without the program name). Reports go to out,
// usage errors and text-mode diagnostics to err. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cohesion::cli
