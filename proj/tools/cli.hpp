#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relmatch::tools {

// Exit codes.
inline constexpr int kExitTrue = 0;      // true, Finite, Unbounded
inline constexpr int kExitFalse = 1;     // false, NoMatch
inline constexpr int kExitUsage = 2;     // bad flags, regex or automaton file
inline constexpr int kExitCap = 3;       // universal check hit --cap
inline constexpr int kExitMismatch = 4;  // --oracle disagreed with the engine

/// Runs one command line (without the program name).
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relmatch::tools
