#pragma once

#include <cstddef>
#include <optional>

#include "syncaut/dfa.hpp"
#include "syncaut/gadgets.hpp"
#include "syncaut/limits.hpp"

namespace syncaut {

enum class Verdict { holds, fails };

/// Which input a witness word is a reset word for.
enum class Separation { reset_for_first_only, reset_for_second_only };

/// Result of comparing the reset-word languages of two automata.
struct DecisionOutcome {
  Verdict verdict = Verdict::holds;
  std::optional<Word> witness;
  std::optional<Separation> direction;
  std::size_t nodes_expanded = 0;

  bool holds() const noexcept { return verdict == Verdict::holds; }

  /// Builds an outcome, classifying `witness` against `first` and `second`.
  /// Throws std::logic_error unless the witness is reset for exactly one.
  static DecisionOutcome make(Verdict verdict, const Dfa& first, const Dfa& second,
                              std::optional<Word> witness, std::size_t nodes_expanded);
};

/// Decides Syn(a) ⊆ Syn(b) by breadth-first search over the reachable pairs
/// (image of Q_a, image of Q_b). Fails at the first pair whose first
/// component is a singleton and whose second is not; the witness is the
/// shortest such word, lexicographically least by a's alphabet order.
/// Throws AlphabetMismatch, or CapExceeded past `limits.pair_cap` pairs.
DecisionOutcome syn_inclusion(const Dfa& a, const Dfa& b, const Limits& limits = {});

/// Both inclusions, a ⊆ b checked first; the witness comes from the first
/// failing direction.
DecisionOutcome syn_equality(const Dfa& a, const Dfa& b, const Limits& limits = {});

/// Decides Syn(a) ⊊ Syn(b) as Syn(a) = Syn(a × b) and Syn(a) ≠ Syn(b).
/// When it holds, the witness is the shortest word reset for b but not a.
/// When Syn(a) ⊄ Syn(b) the witness is reset for a only. When the languages
/// are equal it fails without a witness.
DecisionOutcome syn_strict_inclusion(const Dfa& a, const Dfa& b, const Limits& limits = {});

struct IdealCheck {
  bool ideal = true;
  /// Shortest word in exactly one of L and its two-sided closure.
  std::optional<Word> witness;
};

/// Compares L[acc] with an acceptor for Σ*·L[acc]·Σ* obtained by subset
/// construction.
IdealCheck check_ideal(const Dfa& acceptor, const Limits& limits = {});
bool is_ideal(const Dfa& acceptor, const Limits& limits = {});

/// Shortest, lexicographically least word accepted by every component, or
/// nothing if the intersection is empty.
std::optional<Word> intersection_nonempty(const ReductionInstance& inst, const Limits& limits = {});

}  // namespace syncaut
