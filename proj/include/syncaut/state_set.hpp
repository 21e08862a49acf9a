#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "syncaut/dfa.hpp"

namespace syncaut {

/// Subset of the states {0..universe-1} of one automaton, stored as a
/// fixed-width bitmap. Equal sets compare and hash equal.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe) : universe_(universe), bits_((universe + 63) / 64, 0) {}

  static StateSet full(std::size_t universe);
  static StateSet singleton(std::size_t universe, State q);

  void insert(State q) { bits_[q >> 6] |= std::uint64_t{1} << (q & 63); }
  bool contains(State q) const { return (bits_[q >> 6] >> (q & 63)) & 1U; }
  std::size_t universe() const noexcept { return universe_; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept { return count() == 0; }
  bool is_singleton() const noexcept { return count() == 1; }

  /// Members in increasing order.
  std::vector<State> elements() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      for (std::uint64_t b = bits_[w]; b != 0; b &= b - 1)
        f(static_cast<State>(w * 64 + static_cast<std::size_t>(std::countr_zero(b))));
    }
  }

  std::size_t hash() const noexcept;
  bool operator==(const StateSet&) const = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct StateSetHash {
  std::size_t operator()(const StateSet& s) const noexcept { return s.hash(); }
};

/// { delta(q, a) : q in s }.
StateSet image(const Dfa& d, const StateSet& s, Letter a);

/// "{q1,q3}" using the state names of `d`, members in state order.
std::string subset_name(const Dfa& d, const StateSet& s);

}  // namespace syncaut
