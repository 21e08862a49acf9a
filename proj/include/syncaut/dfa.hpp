#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace syncaut {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// A word as a sequence of letter tokens. The empty vector is the empty word.
using Word = std::vector<std::string>;

/// A word encoded as letter indices of some alphabet.
using LetterString = std::vector<Letter>;

/// True when `token` is usable as a state or letter name: non-empty, no
/// whitespace, no ':' and no '#'.
bool is_valid_token(std::string_view token) noexcept;

/// Ordered set of distinct letter tokens. The order is significant: it fixes
/// the breadth-first expansion order, and therefore every canonical witness.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  const std::string& letter(Letter i) const { return letters_.at(i); }
  const std::vector<std::string>& letters() const noexcept { return letters_; }

  std::optional<Letter> find(std::string_view token) const;
  /// Like find() but throws Error for an unknown token.
  Letter require(std::string_view token) const;
  bool contains(std::string_view token) const { return find(token).has_value(); }

  /// Same letters in the same order.
  bool operator==(const Alphabet& other) const noexcept { return letters_ == other.letters_; }
  /// Same letters, order ignored.
  bool same_letters(const Alphabet& other) const;

 private:
  std::vector<std::string> letters_;
  std::unordered_map<std::string, Letter> index_;
};

/// Complete deterministic finite automaton, optionally carrying an initial
/// state and a set of final states (the acceptor form).
///
/// Instances are immutable. The transition table is stored row-major: the
/// successor of state `q` on letter `a` is `table()[q * num_letters() + a]`.
class Dfa {
 public:
  Dfa(std::vector<std::string> state_names, Alphabet alphabet, std::vector<State> table,
      std::optional<State> initial = std::nullopt, const std::vector<State>& finals = {});

  std::size_t num_states() const noexcept { return names_.size(); }
  std::size_t num_letters() const noexcept { return alphabet_.size(); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  const std::string& state_name(State q) const { return names_.at(q); }
  const std::vector<std::string>& state_names() const noexcept { return names_; }
  std::optional<State> find_state(std::string_view name) const;
  /// Like find_state() but throws Error for an unknown name.
  State require_state(std::string_view name) const;

  State next(State q, Letter a) const noexcept { return table_[q * alphabet_.size() + a]; }
  std::span<const State> row(State q) const noexcept {
    return {table_.data() + q * alphabet_.size(), alphabet_.size()};
  }
  const std::vector<State>& table() const noexcept { return table_; }

  std::optional<State> initial() const noexcept { return initial_; }
  bool is_acceptor() const noexcept { return initial_.has_value(); }
  bool is_final(State q) const { return final_mask_.at(q); }
  /// Final states in state order.
  std::vector<State> finals() const;

  /// Encodes a token word; throws Error on a letter outside the alphabet.
  LetterString encode(const Word& w) const;
  Word decode(std::span<const Letter> w) const;

  /// Identity of names, alphabet, transitions, initial and finals.
  bool operator==(const Dfa& other) const = default;

 private:
  std::vector<std::string> names_;
  Alphabet alphabet_;
  std::vector<State> table_;
  std::optional<State> initial_;
  std::vector<bool> final_mask_;
  std::unordered_map<std::string, State> index_;
};

/// Name-based incremental construction of a Dfa. build() checks completeness.
class DfaBuilder {
 public:
  explicit DfaBuilder(Alphabet alphabet);

  /// Adds a state; throws Error on a duplicate or invalid name.
  State add_state(const std::string& name);
  bool has_state(std::string_view name) const;

  /// Sets delta(from, letter) = to. Throws Error if already set.
  void set(std::string_view from, std::string_view letter, std::string_view to);
  void set(State from, Letter letter, State to);
  bool is_set(State from, Letter letter) const;

  void set_initial(std::string_view name);
  void add_final(std::string_view name);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  State require_state(std::string_view name) const;

  /// Throws Error naming the first (state, letter) pair without a transition.
  Dfa build() const;

 private:
  static constexpr State unset = static_cast<State>(-1);

  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, State> index_;
  std::vector<State> table_;
  std::optional<State> initial_;
  std::vector<State> finals_;
};

/// delta(q, w); the empty word leaves q unchanged.
State apply(const Dfa& d, State q, std::span<const Letter> w);
/// Name-level apply; throws Error on unknown state or letter.
std::string apply(const Dfa& d, std::string_view state, const Word& w);

/// True iff delta(initial, w) is final. Throws Error if `d` has no initial state.
bool accepts(const Dfa& d, std::span<const Letter> w);
bool accepts(const Dfa& d, const Word& w);

/// Returns a copy of `d` with the given initial state and finals attached.
Dfa with_acceptance(const Dfa& d, State initial, const std::vector<State>& finals);
/// Returns a copy of `d` with no initial state and no finals.
Dfa without_acceptance(const Dfa& d);

/// Index map from letters of `a` to the same-named letters of `b`. Throws
/// AlphabetMismatch unless both alphabets hold the same letters.
std::vector<Letter> letter_map(const Alphabet& a, const Alphabet& b);

/// Renders a word for humans; the empty word prints as "(empty word)".
std::string to_string(const Word& w);

}  // namespace syncaut
