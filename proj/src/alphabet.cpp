#include "syncaut/dfa.hpp"

#include <algorithm>
#include <cctype>

#include "syncaut/error.hpp"

namespace syncaut {

bool is_valid_token(std::string_view token) noexcept {
  if (token.empty()) return false;
  return std::none_of(token.begin(), token.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == ':' || c == '#';
  });
}

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error("alphabet must contain at least one letter");
  for (Letter i = 0; i < letters_.size(); ++i) {
    if (!is_valid_token(letters_[i])) throw Error("invalid letter token '" + letters_[i] + "'");
    if (!index_.emplace(letters_[i], i).second)
      throw Error("duplicate letter '" + letters_[i] + "'");
  }
}

std::optional<Letter> Alphabet::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::require(std::string_view token) const {
  if (auto i = find(token)) return *i;
  throw Error("unknown letter '" + std::string(token) + "'");
}

bool Alphabet::same_letters(const Alphabet& other) const {
  if (size() != other.size()) return false;
  return std::all_of(letters_.begin(), letters_.end(),
                     [&](const std::string& l) { return other.contains(l); });
}

std::vector<Letter> letter_map(const Alphabet& a, const Alphabet& b) {
  if (!a.same_letters(b)) throw AlphabetMismatch("automata are over different alphabets");
  std::vector<Letter> map(a.size());
  for (Letter i = 0; i < a.size(); ++i) map[i] = *b.find(a.letter(i));
  return map;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "(empty word)";
  std::string out;
  for (const auto& t : w) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

}  // namespace syncaut
