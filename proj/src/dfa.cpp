#include "syncaut/dfa.hpp"

#include <algorithm>

#include "syncaut/error.hpp"

namespace syncaut {

Dfa::Dfa(std::vector<std::string> state_names, Alphabet alphabet, std::vector<State> table,
         std::optional<State> initial, const std::vector<State>& finals)
    : names_(std::move(state_names)),
      alphabet_(std::move(alphabet)),
      table_(std::move(table)),
      initial_(initial),
      final_mask_(names_.size(), false) {
  const std::size_t n = names_.size();
  if (n == 0) throw Error("automaton must have at least one state");
  for (State q = 0; q < n; ++q) {
    if (!is_valid_token(names_[q])) throw Error("invalid state token '" + names_[q] + "'");
    if (!index_.emplace(names_[q], q).second) throw Error("duplicate state '" + names_[q] + "'");
  }
  if (table_.size() != n * alphabet_.size())
    throw Error("transition table size does not match states x letters");
  if (std::any_of(table_.begin(), table_.end(), [n](State t) { return t >= n; }))
    throw Error("transition target out of range");
  if (initial_ && *initial_ >= n) throw Error("initial state out of range");
  for (State f : finals) {
    if (f >= n) throw Error("final state out of range");
    final_mask_[f] = true;
  }
}

std::optional<State> Dfa::find_state(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

State Dfa::require_state(std::string_view name) const {
  if (auto q = find_state(name)) return *q;
  throw Error("unknown state '" + std::string(name) + "'");
}

std::vector<State> Dfa::finals() const {
  std::vector<State> out;
  for (State q = 0; q < names_.size(); ++q)
    if (final_mask_[q]) out.push_back(q);
  return out;
}

LetterString Dfa::encode(const Word& w) const {
  LetterString out;
  out.reserve(w.size());
  for (const auto& t : w) out.push_back(alphabet_.require(t));
  return out;
}

Word Dfa::decode(std::span<const Letter> w) const {
  Word out;
  out.reserve(w.size());
  for (Letter a : w) out.push_back(alphabet_.letter(a));
  return out;
}

DfaBuilder::DfaBuilder(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

State DfaBuilder::add_state(const std::string& name) {
  if (!is_valid_token(name)) throw Error("invalid state token '" + name + "'");
  const auto q = static_cast<State>(names_.size());
  if (!index_.emplace(name, q).second) throw Error("duplicate state '" + name + "'");
  names_.push_back(name);
  table_.resize(table_.size() + alphabet_.size(), unset);
  return q;
}

bool DfaBuilder::has_state(std::string_view name) const {
  return index_.contains(std::string(name));
}

State DfaBuilder::require_state(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw Error("unknown state '" + std::string(name) + "'");
  return it->second;
}

void DfaBuilder::set(std::string_view from, std::string_view letter, std::string_view to) {
  set(require_state(from), alphabet_.require(letter), require_state(to));
}

void DfaBuilder::set(State from, Letter letter, State to) {
  auto& slot = table_.at(from * alphabet_.size() + letter);
  if (slot != unset)
    throw Error("duplicate transition (" + names_[from] + ", " + alphabet_.letter(letter) + ")");
  slot = to;
}

bool DfaBuilder::is_set(State from, Letter letter) const {
  return table_.at(from * alphabet_.size() + letter) != unset;
}

void DfaBuilder::set_initial(std::string_view name) { initial_ = require_state(name); }

void DfaBuilder::add_final(std::string_view name) {
  const State q = require_state(name);
  if (std::find(finals_.begin(), finals_.end(), q) == finals_.end()) finals_.push_back(q);
}

Dfa DfaBuilder::build() const {
  const std::size_t k = alphabet_.size();
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] == unset)
      throw Error("missing transition (" + names_[i / k] + ", " + alphabet_.letter(i % k) + ")");
  }
  return Dfa(names_, alphabet_, table_, initial_, finals_);
}

State apply(const Dfa& d, State q, std::span<const Letter> w) {
  for (Letter a : w) q = d.next(q, a);
  return q;
}

std::string apply(const Dfa& d, std::string_view state, const Word& w) {
  const State q = d.require_state(state);
  const LetterString letters = d.encode(w);
  return d.state_name(apply(d, q, letters));
}

bool accepts(const Dfa& d, std::span<const Letter> w) {
  if (!d.initial()) throw Error("automaton has no initial state");
  return d.is_final(apply(d, *d.initial(), w));
}

bool accepts(const Dfa& d, const Word& w) { return accepts(d, std::span<const Letter>(d.encode(w))); }

Dfa with_acceptance(const Dfa& d, State initial, const std::vector<State>& finals) {
  return Dfa(d.state_names(), d.alphabet(), d.table(), initial, finals);
}

Dfa without_acceptance(const Dfa& d) {
  return Dfa(d.state_names(), d.alphabet(), d.table());
}

}  // namespace syncaut
