#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "syncaut/dfa.hpp"
#include "syncaut/limits.hpp"
#include "syncaut/state_set.hpp"

namespace syncaut {

/// Name of the merged singleton state of a power automaton.
inline constexpr const char* sink_state_name = "SINK";

/// True iff w sends every state of d to one common state.
bool is_reset_word(const Dfa& d, std::span<const Letter> w);
bool is_reset_word(const Dfa& d, const Word& w);

/// Reset, and neither a proper prefix nor a proper suffix is reset.
bool is_minimal_reset_word(const Dfa& d, std::span<const Letter> w);
bool is_minimal_reset_word(const Dfa& d, const Word& w);

/// Pairwise criterion: every pair of states can be merged by some word.
/// Polynomial, O(|letters| * |Q|^2).
bool is_synchronizing(const Dfa& d);

/// Letters that are reset words on their own.
std::vector<Letter> reset_letters(const Dfa& d);

/// Power automaton restricted to subsets reachable from Q, with all
/// singletons merged into the sink state "SINK". The initial state is the
/// full set Q (which is SINK itself when |Q| = 1); the only final state is SINK.
struct PowerAutomaton {
  Dfa automaton;
  Dfa source;
  /// subsets[i] is the source subset behind automaton state i; empty for SINK.
  std::vector<StateSet> subsets;
  /// Index of SINK, absent when no singleton is reachable.
  std::optional<State> sink;
};

/// Breadth-first construction in alphabet order. Throws CapExceeded once
/// more than `limits.subset_cap` subsets are reached.
PowerAutomaton power_automaton(const Dfa& d, const Limits& limits = {});

struct SyncReport {
  bool synchronizing = false;
  /// Shortest reset word, lexicographically least among the shortest.
  std::optional<Word> shortest_reset;
  std::optional<std::size_t> shortest_length;
  std::size_t nodes_expanded = 0;
};

/// Breadth-first search from Q to the first singleton image.
SyncReport shortest_reset_word(const Dfa& d, const Limits& limits = {});

/// Minimal acceptor of the reset-word language of d.
Dfa syn_language_dfa(const Dfa& d, const Limits& limits = {});

/// Number of states of syn_language_dfa(d).
std::size_t state_complexity(const Dfa& d, const Limits& limits = {});

}  // namespace syncaut
