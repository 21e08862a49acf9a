#include "syncaut/state_set.hpp"

namespace syncaut {

StateSet StateSet::full(std::size_t universe) {
  StateSet s(universe);
  for (State q = 0; q < universe; ++q) s.insert(q);
  return s;
}

StateSet StateSet::singleton(std::size_t universe, State q) {
  StateSet s(universe);
  s.insert(q);
  return s;
}

std::vector<State> StateSet::elements() const {
  std::vector<State> out;
  for_each([&](State q) { out.push_back(q); });
  return out;
}

std::size_t StateSet::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto w : bits_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

StateSet image(const Dfa& d, const StateSet& s, Letter a) {
  StateSet out(s.universe());
  s.for_each([&](State q) { out.insert(d.next(q, a)); });
  return out;
}

std::string subset_name(const Dfa& d, const StateSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](State q) {
    if (!first) out += ',';
    out += d.state_name(q);
    first = false;
  });
  return out + "}";
}

}  // namespace syncaut
