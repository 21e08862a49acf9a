#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "syncaut/dfa.hpp"

namespace syncaut::testing {

Alphabet ab();

/// Acceptor over {a,b} for words ending in `letter`; states e0 (initial), e1.
Dfa ends_with(const std::string& letter);
/// Acceptor over {a,b} for words containing an a; states c0 (initial), c1.
Dfa contains_a();
/// Single state "q" with a self-loop on every letter of `sigma`.
Dfa one_state(const Alphabet& sigma);
/// Two states over {a,b}; a swaps them, b fixes them.
Dfa permutation_dfa();
/// Cerny automaton: a is the cycle i -> i+1 mod n, b sends 0 to 1 and fixes the rest.
Dfa cerny(std::size_t n);
/// Two states over {a,b}: a sends both to 0, b swaps.
Dfa merge_and_swap();

Dfa random_dfa(std::mt19937_64& rng, std::size_t states, std::size_t letters);
/// Random acceptor: random transitions, initial 0, each state final with probability 1/2.
Dfa random_acceptor(std::mt19937_64& rng, std::size_t states, std::size_t letters);
/// Rejection-samples until is_synchronizing holds (checked by brute force).
Dfa random_sync_dfa(std::mt19937_64& rng, std::size_t states, std::size_t letters);

/// Every word over `letters` letters of length <= max_len, shortest first,
/// lexicographic within a length.
std::vector<LetterString> all_words(std::size_t letters, std::size_t max_len);

/// Random word of length <= max_len.
LetterString random_word(std::mt19937_64& rng, std::size_t letters, std::size_t max_len);

}  // namespace syncaut::testing

#include "syncaut/gadgets.hpp"

namespace syncaut::testing {

/// (ends-with-a, ends-with-b): empty intersection.
ReductionInstance empty_instance();
/// (ends-with-a, contains-a): intersection contains "a".
ReductionInstance nonempty_instance();
/// Gadget B over {a,b}.
Dfa gadget_b();
/// Witness-I acceptor over {a,b}.
Dfa witness_i();
/// Membership in (S+x)*yD* + (S+x)*zD+ decided directly on the tokens.
bool in_witness_ideal(const Word& w);

}  // namespace syncaut::testing
