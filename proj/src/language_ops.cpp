#include "syncaut/language_ops.hpp"

#include <map>
#include <queue>
#include <unordered_map>

#include "syncaut/bfs_tree.hpp"
#include "syncaut/error.hpp"
#include "syncaut/state_set.hpp"

namespace syncaut {
namespace {

struct TupleHash {
  std::size_t operator()(const std::vector<State>& t) const noexcept {
    std::size_t h = 0;
    for (State q : t) h = h * 1000003U ^ q;
    return h;
  }
};

void require_acceptor(const Dfa& d) {
  if (!d.is_acceptor()) throw Error("automaton has no initial state");
}

}  // namespace

Dfa product_acceptors(std::span<const Dfa> acceptors, const Limits& limits) {
  if (acceptors.empty()) throw Error("product of an empty list of automata");
  const Alphabet& sigma = acceptors.front().alphabet();
  std::vector<std::vector<Letter>> maps;
  for (const auto& d : acceptors) {
    require_acceptor(d);
    maps.push_back(letter_map(sigma, d.alphabet()));
  }

  BfsTree<std::vector<State>, TupleHash> tree;
  std::vector<State> root;
  for (const auto& d : acceptors) root.push_back(*d.initial());
  tree.discover_root(root);

  std::vector<State> table;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    for (Letter a = 0; a < sigma.size(); ++a) {
      std::vector<State> succ(acceptors.size());
      for (std::size_t c = 0; c < acceptors.size(); ++c) succ[c] = acceptors[c].next(tree.node(i)[c], maps[c][a]);
      auto [idx, fresh] = tree.discover(std::move(succ), i, a);
      if (fresh && tree.size() > limits.subset_cap) throw CapExceeded("product", limits.subset_cap, tree.size());
      table.push_back(static_cast<State>(idx));
    }
  }

  std::vector<std::string> names;
  std::vector<State> finals;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    std::string name = "(";
    bool all_final = true;
    for (std::size_t c = 0; c < acceptors.size(); ++c) {
      if (c > 0) name += ',';
      name += acceptors[c].state_name(tree.node(i)[c]);
      all_final = all_final && acceptors[c].is_final(tree.node(i)[c]);
    }
    names.push_back(name + ")");
    if (all_final) finals.push_back(static_cast<State>(i));
  }
  return Dfa(std::move(names), sigma, std::move(table), State{0}, finals);
}

std::optional<Word> shortest_accepted_word(const Dfa& acceptor) {
  require_acceptor(acceptor);
  BfsTree<State> tree;
  tree.discover_root(*acceptor.initial());
  if (acceptor.is_final(*acceptor.initial())) return Word{};
  for (std::size_t i = 0; i < tree.size(); ++i) {
    for (Letter a = 0; a < acceptor.num_letters(); ++a) {
      const State t = acceptor.next(tree.node(i), a);
      auto [idx, fresh] = tree.discover(t, i, a);
      if (fresh && acceptor.is_final(t)) return acceptor.decode(tree.path_to(idx));
    }
  }
  return std::nullopt;
}

Dfa minimize(const Dfa& acceptor) {
  require_acceptor(acceptor);
  const std::size_t k = acceptor.num_letters();

  // Reachable part, in breadth-first order.
  std::vector<State> order{*acceptor.initial()};
  std::vector<std::size_t> pos(acceptor.num_states(), static_cast<std::size_t>(-1));
  pos[order[0]] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Letter a = 0; a < k; ++a) {
      const State t = acceptor.next(order[i], a);
      if (pos[t] == static_cast<std::size_t>(-1)) {
        pos[t] = order.size();
        order.push_back(t);
      }
    }
  }
  const std::size_t n = order.size();

  // Moore refinement over the reachable states (indexed by discovery position).
  std::vector<std::size_t> cls(n);
  for (std::size_t i = 0; i < n; ++i) cls[i] = acceptor.is_final(order[i]) ? 1 : 0;
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> sig{cls[i]};
      for (Letter a = 0; a < k; ++a) sig.push_back(cls[pos[acceptor.next(order[i], a)]]);
      next[i] = ids.try_emplace(std::move(sig), ids.size()).first->second;
    }
    const std::size_t count = ids.size();
    cls = std::move(next);
    if (count == classes) break;
    classes = count;
  }

  // Renumber classes in breadth-first discovery order of the quotient.
  std::vector<std::size_t> rep(classes, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < n; ++i)
    if (rep[cls[i]] == static_cast<std::size_t>(-1)) rep[cls[i]] = i;
  std::vector<std::size_t> new_id(classes, static_cast<std::size_t>(-1));
  std::vector<std::size_t> queue{cls[0]};
  new_id[cls[0]] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const State q = order[rep[queue[h]]];
    for (Letter a = 0; a < k; ++a) {
      const std::size_t c = cls[pos[acceptor.next(q, a)]];
      if (new_id[c] == static_cast<std::size_t>(-1)) {
        new_id[c] = queue.size();
        queue.push_back(c);
      }
    }
  }

  std::vector<std::string> names(classes);
  std::vector<State> table(classes * k);
  std::vector<State> finals;
  for (std::size_t c = 0; c < classes; ++c) {
    const std::size_t id = new_id[c];
    const State q = order[rep[c]];
    names[id] = "q" + std::to_string(id);
    for (Letter a = 0; a < k; ++a) table[id * k + a] = static_cast<State>(new_id[cls[pos[acceptor.next(q, a)]]]);
    if (acceptor.is_final(q)) finals.push_back(static_cast<State>(id));
  }
  std::sort(finals.begin(), finals.end());
  return Dfa(std::move(names), acceptor.alphabet(), std::move(table), State{0}, finals);
}

Equivalence equivalent(const Dfa& a, const Dfa& b) {
  require_acceptor(a);
  require_acceptor(b);
  const auto map = letter_map(a.alphabet(), b.alphabet());
  const std::uint64_t nb = b.num_states();

  BfsTree<std::uint64_t> tree;
  auto differs = [&](std::uint64_t node) {
    return a.is_final(static_cast<State>(node / nb)) != b.is_final(static_cast<State>(node % nb));
  };
  const std::uint64_t root = std::uint64_t{*a.initial()} * nb + *b.initial();
  tree.discover_root(root);
  if (differs(root)) return {false, Word{}};
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const std::uint64_t node = tree.node(i);
    const auto qa = static_cast<State>(node / nb);
    const auto qb = static_cast<State>(node % nb);
    for (Letter l = 0; l < a.num_letters(); ++l) {
      const std::uint64_t succ = std::uint64_t{a.next(qa, l)} * nb + b.next(qb, map[l]);
      auto [idx, fresh] = tree.discover(succ, i, l);
      if (fresh && differs(succ)) return {false, a.decode(tree.path_to(idx))};
    }
  }
  return {true, std::nullopt};
}

Dfa determinize_subset(const Dfa& base, std::span<const ExtraEdge> extra, const Limits& limits) {
  require_acceptor(base);
  const std::size_t n = base.num_states();
  const std::size_t k = base.num_letters();
  std::vector<std::vector<State>> more(n * k);
  for (const auto& e : extra) {
    if (e.from >= n || e.to >= n || e.letter >= k) throw Error("extra edge out of range");
    more[e.from * k + e.letter].push_back(e.to);
  }

  BfsTree<StateSet, StateSetHash> tree;
  tree.discover_root(StateSet::singleton(n, *base.initial()));
  std::vector<State> table;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    for (Letter a = 0; a < k; ++a) {
      StateSet succ(n);
      tree.node(i).for_each([&](State q) {
        succ.insert(base.next(q, a));
        for (State t : more[q * k + a]) succ.insert(t);
      });
      auto [idx, fresh] = tree.discover(std::move(succ), i, a);
      if (fresh && tree.size() > limits.subset_cap)
        throw CapExceeded("subset construction", limits.subset_cap, tree.size());
      table.push_back(static_cast<State>(idx));
    }
  }

  std::vector<std::string> names;
  std::vector<State> finals;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    names.push_back(subset_name(base, tree.node(i)));
    bool fin = false;
    tree.node(i).for_each([&](State q) { fin = fin || base.is_final(q); });
    if (fin) finals.push_back(static_cast<State>(i));
  }
  return Dfa(std::move(names), base.alphabet(), std::move(table), State{0}, finals);
}

}  // namespace syncaut
