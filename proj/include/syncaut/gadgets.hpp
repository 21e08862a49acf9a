#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "syncaut/dfa.hpp"

namespace syncaut {

/// An instance of the finite-automata-intersection problem: acceptors
/// M_1..M_n over one shared base alphabet.
class ReductionInstance {
 public:
  /// Throws Error for an empty list or a component without initial state,
  /// and AlphabetMismatch when the components disagree on their letters.
  explicit ReductionInstance(std::vector<Dfa> components);

  const std::vector<Dfa>& components() const noexcept { return components_; }
  /// Letters of the first component, in its order.
  const Alphabet& alphabet() const noexcept { return components_.front().alphabet(); }

 private:
  std::vector<Dfa> components_;
};

/// A ReductionInstance in which no initial state has incoming edges and no
/// initial state is final. Only normalize_instance() creates one.
class NormalizedInstance {
 public:
  const std::vector<Dfa>& components() const noexcept { return components_; }
  const Alphabet& alphabet() const noexcept { return components_.front().alphabet(); }

 private:
  friend NormalizedInstance normalize_instance(const ReductionInstance& inst);
  explicit NormalizedInstance(std::vector<Dfa> components) : components_(std::move(components)) {}

  std::vector<Dfa> components_;
};

/// Gives every component whose initial state has incoming edges a fresh
/// initial state (named after the old one with a trailing apostrophe) that
/// copies the old initial's outgoing transitions. Components already in
/// normal form are returned unchanged. Throws Error, naming the 1-based
/// component index, if a component accepts the empty word.
NormalizedInstance normalize_instance(const ReductionInstance& inst);

/// Names of the three letters the gadgets add to the base alphabet.
struct GadgetLetters {
  std::string x = "x";
  std::string y = "y";
  std::string z = "z";
};

/// Base letters followed by x, y, z. Throws Error if any of x, y, z is
/// already a base letter or they are not distinct.
Alphabet gadget_alphabet(const Alphabet& sigma, const GadgetLetters& letters = {});

/// The automaton encoding an intersection instance. Component states are
/// renamed "<i>.<name>" (i is 1-based); then come the sink "s" and the
/// auxiliary state "h". For q in Q_i:
///   base letter a -> delta_i(q, a)
///   x -> the initial state of M_i
///   y -> s
///   z -> s if q is final in M_i, else h
/// and h, s go to s on every letter.
Dfa build_gadget_A(const NormalizedInstance& inst, const GadgetLetters& letters = {});

/// Three-state automaton {p1, p2, s}: p1 is fixed by the base letters and x,
/// goes to s on y and to p2 on z; p2 and s go to s on every letter.
Dfa build_gadget_B(const Alphabet& sigma, const GadgetLetters& letters = {});

/// Acceptor {A0, A1, ACC} for (S+x)*yD* + (S+x)*zD+, where S is the base
/// alphabet and D = S + {x, y, z}.
Dfa build_witness_I(const Alphabet& sigma, const GadgetLetters& letters = {});

/// Full product on Q1 x Q2 (not pruned to reachable pairs), states named
/// "(q1,q2)" in row-major order. Its reset words are exactly the words
/// reset for both factors.
Dfa product_sync(const Dfa& a, const Dfa& b);

/// Ordered letters d_1..d_k used by the binary encoding.
class LetterOrder {
 public:
  explicit LetterOrder(std::vector<std::string> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  const std::string& letter(std::size_t i) const { return letters_.at(i); }
  const std::vector<std::string>& letters() const noexcept { return letters_; }
  /// 0-based position of `token`, if present.
  std::optional<std::size_t> position(const std::string& token) const;

 private:
  std::vector<std::string> letters_;
};

/// y, z, the base letters in order, then x.
LetterOrder gadget_letter_order(const Alphabet& sigma, const GadgetLetters& letters = {});

inline constexpr const char* mu = "mu";
inline constexpr const char* lambda = "lambda";
inline constexpr const char* binary_sink_name = "zeta";

/// d_k -> mu^(k-1) lambda, letter by letter. Throws Error on a letter
/// outside `order`.
Word morphism_hbar(const Word& w, const LetterOrder& order);

/// Inverse coding: splits v into blocks mu^k lambda and maps each block to
/// d_(k+1), or to the last letter of `order` once k >= |order|. Throws Error
/// if v is non-empty and does not end in lambda, or holds another token.
Word morphism_h(const Word& v, const LetterOrder& order);

/// Encodes a unique-sink automaton over k >= 2 letters as one over
/// {mu, lambda}. Each non-sink state p becomes a column "p,1".."p,k"; mu moves
/// "p,j" to "p,j+1" and fixes "p,k"; lambda sends "p,j" to "zeta" when
/// d_j takes p to the sink and to "t,1" when it takes p to t. "zeta" is fixed
/// by both letters. Throws Error if `d` lacks a unique sink or `order` is
/// not a permutation of its alphabet.
Dfa binarize(const Dfa& d, const LetterOrder& order);

/// States fixed by every letter.
std::vector<State> sink_states(const Dfa& d);

/// Reads an instance manifest: one component path per line, '#' comments
/// and blank lines ignored, relative paths resolved against the manifest's
/// directory.
std::vector<std::filesystem::path> read_manifest(const std::filesystem::path& manifest);

}  // namespace syncaut
