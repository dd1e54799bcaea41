#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace pdt {

/// Exit codes of the `pdt` tool.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;           // parse, usage or I/O error
inline constexpr int kStrictViolation = 2;  // preferences contradict a strict fact
inline constexpr int kTableMismatch = 3;
inline constexpr int kAxiomViolation = 4;
}  // namespace exit_code

/// Runs one CLI invocation. `args` excludes the program name.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pdt
