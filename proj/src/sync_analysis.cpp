#include "syncaut/sync_analysis.hpp"

#include "syncaut/bfs_tree.hpp"
#include "syncaut/error.hpp"
#include "syncaut/language_ops.hpp"

namespace syncaut {

bool is_reset_word(const Dfa& d, std::span<const Letter> w) {
  const State target = apply(d, 0, w);
  for (State q = 1; q < d.num_states(); ++q)
    if (apply(d, q, w) != target) return false;
  return true;
}

bool is_reset_word(const Dfa& d, const Word& w) {
  const LetterString letters = d.encode(w);
  return is_reset_word(d, std::span<const Letter>(letters));
}

bool is_minimal_reset_word(const Dfa& d, std::span<const Letter> w) {
  if (!is_reset_word(d, w)) return false;
  for (std::size_t len = 0; len < w.size(); ++len) {
    if (is_reset_word(d, w.first(len)) || is_reset_word(d, w.last(len))) return false;
  }
  return true;
}

bool is_minimal_reset_word(const Dfa& d, const Word& w) {
  const LetterString letters = d.encode(w);
  return is_minimal_reset_word(d, std::span<const Letter>(letters));
}

bool is_synchronizing(const Dfa& d) {
  const std::size_t n = d.num_states();
  if (n == 1) return true;
  const std::size_t k = d.num_letters();
  auto pair_index = [n](State p, State q) {
    if (p > q) std::swap(p, q);
    return static_cast<std::size_t>(p) * n + q;
  };

  // Reverse pair graph: merged[i] marks pairs that some word collapses.
  std::vector<std::vector<std::size_t>> preimages(n * n);
  std::vector<char> merged(n * n, 0);
  std::vector<std::size_t> queue;
  for (State p = 0; p < n; ++p) {
    for (State q = p + 1; q < n; ++q) {
      const std::size_t src = pair_index(p, q);
      for (Letter a = 0; a < k; ++a) {
        const State p2 = d.next(p, a);
        const State q2 = d.next(q, a);
        if (p2 == q2) {
          if (!merged[src]) {
            merged[src] = 1;
            queue.push_back(src);
          }
        } else {
          preimages[pair_index(p2, q2)].push_back(src);
        }
      }
    }
  }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (std::size_t src : preimages[queue[h]]) {
      if (!merged[src]) {
        merged[src] = 1;
        queue.push_back(src);
      }
    }
  }
  return queue.size() == n * (n - 1) / 2;
}

std::vector<Letter> reset_letters(const Dfa& d) {
  std::vector<Letter> out;
  for (Letter a = 0; a < d.num_letters(); ++a) {
    const Letter w[] = {a};
    if (is_reset_word(d, w)) out.push_back(a);
  }
  return out;
}

PowerAutomaton power_automaton(const Dfa& d, const Limits& limits) {
  const std::size_t n = d.num_states();
  const std::size_t k = d.num_letters();
  // The empty set stands for SINK.
  auto canonical = [n](StateSet s) { return s.is_singleton() ? StateSet(n) : s; };

  BfsTree<StateSet, StateSetHash> tree;
  tree.discover_root(canonical(StateSet::full(n)));
  std::vector<State> table;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    for (Letter a = 0; a < k; ++a) {
      const StateSet& s = tree.node(i);
      auto [idx, fresh] = tree.discover(s.empty() ? StateSet(n) : canonical(image(d, s, a)), i, a);
      if (fresh && tree.size() > limits.subset_cap)
        throw CapExceeded("power automaton", limits.subset_cap, tree.size());
      table.push_back(static_cast<State>(idx));
    }
  }

  std::vector<std::string> names;
  std::vector<StateSet> subsets;
  std::optional<State> sink;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const StateSet& s = tree.node(i);
    if (s.empty()) {
      sink = static_cast<State>(i);
      names.emplace_back(sink_state_name);
    } else {
      names.push_back(subset_name(d, s));
    }
    subsets.push_back(s);
  }
  std::vector<State> finals;
  if (sink) finals.push_back(*sink);
  Dfa automaton(std::move(names), d.alphabet(), std::move(table), State{0}, finals);
  return PowerAutomaton{std::move(automaton), d, std::move(subsets), sink};
}

SyncReport shortest_reset_word(const Dfa& d, const Limits& limits) {
  const std::size_t n = d.num_states();
  SyncReport report;
  if (n == 1) {
    report.synchronizing = true;
    report.shortest_reset = Word{};
    report.shortest_length = 0;
    return report;
  }
  BfsTree<StateSet, StateSetHash> tree;
  tree.discover_root(StateSet::full(n));
  for (std::size_t i = 0; i < tree.size(); ++i) {
    ++report.nodes_expanded;
    for (Letter a = 0; a < d.num_letters(); ++a) {
      auto [idx, fresh] = tree.discover(image(d, tree.node(i), a), i, a);
      if (!fresh) continue;
      if (tree.node(idx).is_singleton()) {
        const LetterString w = tree.path_to(idx);
        report.synchronizing = true;
        report.shortest_reset = d.decode(w);
        report.shortest_length = w.size();
        return report;
      }
      if (tree.size() > limits.subset_cap) throw CapExceeded("reset word search", limits.subset_cap, tree.size());
    }
  }
  return report;
}

Dfa syn_language_dfa(const Dfa& d, const Limits& limits) {
  return minimize(power_automaton(d, limits).automaton);
}

std::size_t state_complexity(const Dfa& d, const Limits& limits) {
  return syn_language_dfa(d, limits).num_states();
}

}  // namespace syncaut
