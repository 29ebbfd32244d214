#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arrcoh {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitInvariant = 3;

/// Parses the arguments (without the program name), runs the command and
/// writes the report to out, diagnostics to err. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arrcoh
