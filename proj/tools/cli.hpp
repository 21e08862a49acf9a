#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "syncaut/dfa.hpp"

namespace syncaut::cli {

/// Process exit codes.
inline constexpr int exit_holds = 0;
inline constexpr int exit_fails = 1;
inline constexpr int exit_error = 2;

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses a command-line word: whitespace-separated letter tokens, or a
/// contiguous string of one-character letters when every letter of the
/// alphabet is a single character. The empty string is the empty word.
Word parse_word(const std::string& text, const Alphabet& alphabet);

}  // namespace syncaut::cli
