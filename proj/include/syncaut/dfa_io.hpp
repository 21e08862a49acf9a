#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "syncaut/dfa.hpp"

namespace syncaut {

/// Parses the line-oriented automaton format:
///
///     alphabet: a b
///     states: q0 q1
///     initial: q0        # optional
///     final: q1          # optional
///     q0 a q1
///     ...
///
/// '#' starts a comment, blank lines are ignored, and exactly one transition
/// line is required per (state, letter) pair. Throws ParseError.
Dfa parse_dfa(std::string_view text);

/// Emits header lines then transitions in state order x letter order.
std::string serialize_dfa(const Dfa& d);

Dfa read_dfa_file(const std::filesystem::path& path);
void write_dfa_file(const std::filesystem::path& path, const Dfa& d);

}  // namespace syncaut
