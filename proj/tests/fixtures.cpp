#include "fixtures.hpp"

#include "oracles.hpp"

namespace syncaut::testing {

Alphabet ab() { return Alphabet({"a", "b"}); }

Dfa ends_with(const std::string& letter) {
  DfaBuilder b(ab());
  b.add_state("e0");
  b.add_state("e1");
  for (const auto* from : {"e0", "e1"}) {
    for (const auto* l : {"a", "b"}) b.set(from, l, l == letter ? "e1" : "e0");
  }
  b.set_initial("e0");
  b.add_final("e1");
  return b.build();
}

Dfa contains_a() {
  DfaBuilder b(ab());
  b.add_state("c0");
  b.add_state("c1");
  b.set("c0", "a", "c1");
  b.set("c0", "b", "c0");
  b.set("c1", "a", "c1");
  b.set("c1", "b", "c1");
  b.set_initial("c0");
  b.add_final("c1");
  return b.build();
}

Dfa one_state(const Alphabet& sigma) {
  DfaBuilder b(sigma);
  b.add_state("q");
  for (const auto& l : sigma.letters()) b.set("q", l, "q");
  return b.build();
}

Dfa permutation_dfa() {
  return Dfa({"0", "1"}, ab(), {1, 0, 0, 1});
}

Dfa cerny(std::size_t n) {
  std::vector<std::string> names;
  std::vector<State> table;
  for (State i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    table.push_back(static_cast<State>((i + 1) % n));
    table.push_back(i == 0 ? 1 : i);
  }
  return Dfa(std::move(names), ab(), std::move(table));
}

Dfa merge_and_swap() { return Dfa({"0", "1"}, ab(), {0, 1, 0, 0}); }

namespace {

Alphabet letters_of(std::size_t k) {
  std::vector<std::string> ls;
  for (std::size_t i = 0; i < k; ++i) ls.push_back(std::string(1, static_cast<char>('a' + i)));
  return Alphabet(std::move(ls));
}

std::vector<State> random_table(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
  std::vector<State> t(n * k);
  for (auto& x : t) x = pick(rng);
  return t;
}

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  return names;
}

}  // namespace

Dfa random_dfa(std::mt19937_64& rng, std::size_t states, std::size_t letters) {
  return Dfa(numbered(states), letters_of(letters), random_table(rng, states, letters));
}

Dfa random_acceptor(std::mt19937_64& rng, std::size_t states, std::size_t letters) {
  std::vector<State> finals;
  for (State q = 0; q < states; ++q)
    if (rng() & 1U) finals.push_back(q);
  return Dfa(numbered(states), letters_of(letters), random_table(rng, states, letters), State{0}, finals);
}

Dfa random_sync_dfa(std::mt19937_64& rng, std::size_t states, std::size_t letters) {
  for (;;) {
    Dfa d = random_dfa(rng, states, letters);
    if (oracle::is_synchronizing(d)) return d;
  }
}

std::vector<LetterString> all_words(std::size_t letters, std::size_t max_len) {
  std::vector<LetterString> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Letter a = 0; a < letters; ++a) {
        LetterString w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

LetterString random_word(std::mt19937_64& rng, std::size_t letters, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Letter> pick(0, static_cast<Letter>(letters - 1));
  LetterString w(len(rng));
  for (auto& a : w) a = pick(rng);
  return w;
}

}  // namespace syncaut::testing

namespace syncaut::testing {

ReductionInstance empty_instance() { return ReductionInstance({ends_with("a"), ends_with("b")}); }
ReductionInstance nonempty_instance() { return ReductionInstance({ends_with("a"), contains_a()}); }
Dfa gadget_b() { return build_gadget_B(ab()); }
Dfa witness_i() { return build_witness_I(ab()); }

bool in_witness_ideal(const Word& w) {
  std::size_t i = 0;
  while (i < w.size() && (w[i] == "a" || w[i] == "b" || w[i] == "x")) ++i;
  if (i == w.size()) return false;
  if (w[i] == "y") return true;
  return w[i] == "z" && i + 1 < w.size();
}

}  // namespace syncaut::testing
