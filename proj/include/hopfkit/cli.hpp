#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfkit::cli {

/// Exit codes: 0 success, 1 mathematical failure (axiom violation,
/// obstruction verdict, non-confluence), 2 usage, parse or validation error,
/// 3 resource limit.
enum ExitCode { Success = 0, MathFailure = 1, UsageError = 2, ResourceError = 3 };

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfkit::cli
