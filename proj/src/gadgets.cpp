#include "syncaut/gadgets.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "syncaut/error.hpp"
#include "syncaut/language_ops.hpp"

namespace syncaut {
namespace {

bool has_incoming(const Dfa& d, State target) {
  for (State t : d.table())
    if (t == target) return true;
  return false;
}

Dfa add_fresh_initial(const Dfa& m) {
  const State old = *m.initial();
  std::string fresh = m.state_name(old) + "'";
  while (m.find_state(fresh)) fresh += "'";

  DfaBuilder b(m.alphabet());
  b.add_state(fresh);
  for (const auto& name : m.state_names()) b.add_state(name);
  // State i of m is state i + 1 of the builder.
  for (Letter a = 0; a < m.num_letters(); ++a) b.set(State{0}, a, m.next(old, a) + 1);
  for (State q = 0; q < m.num_states(); ++q)
    for (Letter a = 0; a < m.num_letters(); ++a) b.set(q + 1, a, m.next(q, a) + 1);
  b.set_initial(fresh);
  for (State f : m.finals()) b.add_final(m.state_name(f));
  return b.build();
}

}  // namespace

ReductionInstance::ReductionInstance(std::vector<Dfa> components) : components_(std::move(components)) {
  if (components_.empty()) throw Error("intersection instance needs at least one component");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (!components_[i].is_acceptor())
      throw Error("component " + std::to_string(i + 1) + " has no initial state");
    if (!components_[i].alphabet().same_letters(components_.front().alphabet()))
      throw AlphabetMismatch("component " + std::to_string(i + 1) + " is over a different alphabet");
  }
}

NormalizedInstance normalize_instance(const ReductionInstance& inst) {
  std::vector<Dfa> out;
  for (std::size_t i = 0; i < inst.components().size(); ++i) {
    const Dfa& m = inst.components()[i];
    if (m.is_final(*m.initial()))
      throw Error("component " + std::to_string(i + 1) + " accepts the empty word (epsilon accepted)");
    if (!has_incoming(m, *m.initial())) {
      out.push_back(m);
      continue;
    }
    Dfa normalized = add_fresh_initial(m);
    if (!equivalent(m, normalized)) throw std::logic_error("normalization changed a component language");
    out.push_back(std::move(normalized));
  }
  return NormalizedInstance(std::move(out));
}

Alphabet gadget_alphabet(const Alphabet& sigma, const GadgetLetters& letters) {
  for (const auto* l : {&letters.x, &letters.y, &letters.z}) {
    if (sigma.contains(*l)) throw Error("gadget letter '" + *l + "' clashes with a base letter");
  }
  std::vector<std::string> all = sigma.letters();
  all.insert(all.end(), {letters.x, letters.y, letters.z});
  return Alphabet(std::move(all));
}

Dfa build_gadget_A(const NormalizedInstance& inst, const GadgetLetters& letters) {
  const Alphabet& sigma = inst.alphabet();
  const Alphabet delta = gadget_alphabet(sigma, letters);
  DfaBuilder b(delta);

  std::vector<std::vector<State>> renamed;
  for (std::size_t i = 0; i < inst.components().size(); ++i) {
    const Dfa& m = inst.components()[i];
    std::vector<State> ids;
    for (const auto& name : m.state_names()) ids.push_back(b.add_state(std::to_string(i + 1) + "." + name));
    renamed.push_back(std::move(ids));
  }
  const State s = b.add_state("s");
  const State h = b.add_state("h");
  const Letter x = delta.require(letters.x);
  const Letter y = delta.require(letters.y);
  const Letter z = delta.require(letters.z);

  for (std::size_t i = 0; i < inst.components().size(); ++i) {
    const Dfa& m = inst.components()[i];
    const auto map = letter_map(sigma, m.alphabet());
    const auto& ids = renamed[i];
    for (State q = 0; q < m.num_states(); ++q) {
      for (Letter a = 0; a < sigma.size(); ++a) b.set(ids[q], a, ids[m.next(q, map[a])]);
      b.set(ids[q], x, ids[*m.initial()]);
      b.set(ids[q], y, s);
      b.set(ids[q], z, m.is_final(q) ? s : h);
    }
  }
  for (Letter a = 0; a < delta.size(); ++a) {
    b.set(h, a, s);
    b.set(s, a, s);
  }
  return b.build();
}

Dfa build_gadget_B(const Alphabet& sigma, const GadgetLetters& letters) {
  const Alphabet delta = gadget_alphabet(sigma, letters);
  DfaBuilder b(delta);
  const State p1 = b.add_state("p1");
  const State p2 = b.add_state("p2");
  const State s = b.add_state("s");
  for (Letter a = 0; a < sigma.size(); ++a) b.set(p1, a, p1);
  b.set(p1, delta.require(letters.x), p1);
  b.set(p1, delta.require(letters.y), s);
  b.set(p1, delta.require(letters.z), p2);
  for (Letter a = 0; a < delta.size(); ++a) {
    b.set(p2, a, s);
    b.set(s, a, s);
  }
  return b.build();
}

Dfa build_witness_I(const Alphabet& sigma, const GadgetLetters& letters) {
  const Alphabet delta = gadget_alphabet(sigma, letters);
  DfaBuilder b(delta);
  const State a0 = b.add_state("A0");
  const State a1 = b.add_state("A1");
  const State acc = b.add_state("ACC");
  for (Letter a = 0; a < sigma.size(); ++a) b.set(a0, a, a0);
  b.set(a0, delta.require(letters.x), a0);
  b.set(a0, delta.require(letters.y), acc);
  b.set(a0, delta.require(letters.z), a1);
  for (Letter a = 0; a < delta.size(); ++a) {
    b.set(a1, a, acc);
    b.set(acc, a, acc);
  }
  b.set_initial("A0");
  b.add_final("ACC");
  return b.build();
}

Dfa product_sync(const Dfa& a, const Dfa& b) {
  const auto map = letter_map(a.alphabet(), b.alphabet());
  const std::size_t nb = b.num_states();
  std::vector<std::string> names;
  std::vector<State> table;
  for (State p = 0; p < a.num_states(); ++p) {
    for (State q = 0; q < nb; ++q) {
      names.push_back("(" + a.state_name(p) + "," + b.state_name(q) + ")");
      for (Letter l = 0; l < a.num_letters(); ++l)
        table.push_back(static_cast<State>(a.next(p, l) * nb + b.next(q, map[l])));
    }
  }
  return Dfa(std::move(names), a.alphabet(), std::move(table));
}

LetterOrder::LetterOrder(std::vector<std::string> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error("letter order must not be empty");
  // Reuses the alphabet checks: valid, distinct tokens.
  Alphabet check(letters_);
}

std::optional<std::size_t> LetterOrder::position(const std::string& token) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] == token) return i;
  return std::nullopt;
}

LetterOrder gadget_letter_order(const Alphabet& sigma, const GadgetLetters& letters) {
  std::vector<std::string> order{letters.y, letters.z};
  order.insert(order.end(), sigma.letters().begin(), sigma.letters().end());
  order.push_back(letters.x);
  return LetterOrder(std::move(order));
}

Word morphism_hbar(const Word& w, const LetterOrder& order) {
  Word out;
  for (const auto& letter : w) {
    const auto k = order.position(letter);
    if (!k) throw Error("letter '" + letter + "' is not in the letter order");
    out.insert(out.end(), *k, mu);
    out.emplace_back(lambda);
  }
  return out;
}

Word morphism_h(const Word& v, const LetterOrder& order) {
  if (!v.empty() && v.back() != lambda) throw Error("binary word must end in lambda");
  Word out;
  std::size_t run = 0;
  for (const auto& t : v) {
    if (t == mu) {
      ++run;
    } else if (t == lambda) {
      out.push_back(order.letter(std::min(run, order.size() - 1)));
      run = 0;
    } else {
      throw Error("token '" + t + "' is neither mu nor lambda");
    }
  }
  return out;
}

std::vector<State> sink_states(const Dfa& d) {
  std::vector<State> out;
  for (State q = 0; q < d.num_states(); ++q) {
    bool fixed = true;
    for (Letter a = 0; a < d.num_letters() && fixed; ++a) fixed = d.next(q, a) == q;
    if (fixed) out.push_back(q);
  }
  return out;
}

Dfa binarize(const Dfa& d, const LetterOrder& order) {
  const std::size_t k = order.size();
  if (k < 2) throw Error("binary encoding needs at least two letters");
  if (k != d.num_letters()) throw Error("letter order does not match the automaton alphabet");
  std::vector<Letter> letter_at(k);
  for (std::size_t j = 0; j < k; ++j) {
    const auto a = d.alphabet().find(order.letter(j));
    if (!a) throw Error("letter order mentions '" + order.letter(j) + "', which is not in the alphabet");
    letter_at[j] = *a;
  }
  const auto sinks = sink_states(d);
  if (sinks.size() != 1) throw Error("binary encoding needs a unique sink state, found " + std::to_string(sinks.size()));
  const State sink = sinks.front();

  DfaBuilder b(Alphabet({mu, lambda}));
  std::unordered_map<State, State> column_top;
  for (State p = 0; p < d.num_states(); ++p) {
    if (p == sink) continue;
    column_top[p] = b.add_state(d.state_name(p) + ",1");
    for (std::size_t j = 2; j <= k; ++j) b.add_state(d.state_name(p) + "," + std::to_string(j));
  }
  const State zeta = b.add_state(binary_sink_name);
  const Letter m = 0;
  const Letter l = 1;
  for (State p = 0; p < d.num_states(); ++p) {
    if (p == sink) continue;
    const State top = column_top[p];
    for (std::size_t j = 0; j < k; ++j) {
      const auto cell = static_cast<State>(top + j);
      b.set(cell, m, j + 1 < k ? cell + 1 : cell);
      const State t = d.next(p, letter_at[j]);
      b.set(cell, l, t == sink ? zeta : column_top[t]);
    }
  }
  b.set(zeta, m, zeta);
  b.set(zeta, l, zeta);
  return b.build();
}

std::vector<std::filesystem::path> read_manifest(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw Error("cannot open manifest '" + manifest.string() + "'");
  std::vector<std::filesystem::path> out;
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::string path;
    if (!(tokens >> path)) continue;
    std::filesystem::path p(path);
    out.push_back(p.is_relative() ? manifest.parent_path() / p : p);
  }
  if (out.empty()) throw Error("manifest '" + manifest.string() + "' lists no components");
  return out;
}

}  // namespace syncaut
