#pragma once

#include <optional>
#include <span>
#include <vector>

#include "syncaut/dfa.hpp"
#include "syncaut/limits.hpp"

namespace syncaut {

/// Reachable synchronous product of acceptors over a shared alphabet. It
/// accepts the intersection of their languages. States are named "(q1,...,qn)"
/// and numbered in breadth-first discovery order; the alphabet order is taken
/// from the first component. Throws CapExceeded past `limits.subset_cap` states.
Dfa product_acceptors(std::span<const Dfa> acceptors, const Limits& limits = {});

/// Shortest accepted word, lexicographically least among the shortest.
std::optional<Word> shortest_accepted_word(const Dfa& acceptor);

/// Minimal acceptor: unreachable states dropped, equivalent states merged,
/// states renamed q0, q1, ... in breadth-first discovery order from the
/// initial state.
Dfa minimize(const Dfa& acceptor);

struct Equivalence {
  bool equivalent = true;
  /// Shortest distinguishing word, lexicographically least by the first
  /// automaton's alphabet order. Present iff !equivalent.
  std::optional<Word> witness;

  explicit operator bool() const noexcept { return equivalent; }
};

/// Decides L[a] = L[b] by breadth-first search over state pairs.
Equivalence equivalent(const Dfa& a, const Dfa& b);

/// An additional transition turning a Dfa into a nondeterministic automaton.
struct ExtraEdge {
  State from;
  Letter letter;
  State to;
};

/// Subset construction for `base` plus `extra` edges, started from {initial}.
/// A subset is final when it meets the base finals. States are named by
/// their member lists, e.g. "{q0,q2}". Throws CapExceeded once more than
/// `limits.subset_cap` subsets are discovered.
Dfa determinize_subset(const Dfa& base, std::span<const ExtraEdge> extra, const Limits& limits = {});

}  // namespace syncaut
