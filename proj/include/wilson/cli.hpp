#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace wilson::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitComputation = 2;

/// Runs one command line (without the program name). Reports go to `out`
/// unless --out is given; diagnostics go to `err`, prefixed with "error:".
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace wilson::cli
