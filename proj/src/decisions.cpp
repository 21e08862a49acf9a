#include "syncaut/decisions.hpp"

#include <stdexcept>
#include <vector>

#include "syncaut/bfs_tree.hpp"
#include "syncaut/error.hpp"
#include "syncaut/language_ops.hpp"
#include "syncaut/state_set.hpp"
#include "syncaut/sync_analysis.hpp"

namespace syncaut {
namespace {

struct ImagePair {
  StateSet first;
  StateSet second;
  bool operator==(const ImagePair&) const = default;
};

struct ImagePairHash {
  std::size_t operator()(const ImagePair& p) const noexcept {
    return p.first.hash() * 0x100000001b3ULL ^ p.second.hash();
  }
};

}  // namespace

DecisionOutcome DecisionOutcome::make(Verdict verdict, const Dfa& first, const Dfa& second,
                                      std::optional<Word> witness, std::size_t nodes_expanded) {
  DecisionOutcome out;
  out.verdict = verdict;
  out.nodes_expanded = nodes_expanded;
  if (witness) {
    const bool r1 = is_reset_word(first, *witness);
    const bool r2 = is_reset_word(second, *witness);
    if (r1 == r2) throw std::logic_error("witness '" + to_string(*witness) + "' does not separate the automata");
    out.direction = r1 ? Separation::reset_for_first_only : Separation::reset_for_second_only;
    out.witness = std::move(witness);
  }
  return out;
}

DecisionOutcome syn_inclusion(const Dfa& a, const Dfa& b, const Limits& limits) {
  const auto map = letter_map(a.alphabet(), b.alphabet());
  auto separates = [](const ImagePair& p) { return p.first.is_singleton() && !p.second.is_singleton(); };

  BfsTree<ImagePair, ImagePairHash> tree;
  ImagePair root{StateSet::full(a.num_states()), StateSet::full(b.num_states())};
  if (separates(root)) return DecisionOutcome::make(Verdict::fails, a, b, Word{}, 0);
  tree.discover_root(std::move(root));

  std::size_t expanded = 0;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    // Once the second image is a singleton it stays one: no separating word
    // extends this node.
    if (tree.node(i).second.is_singleton()) continue;
    ++expanded;
    for (Letter l = 0; l < a.num_letters(); ++l) {
      const ImagePair& cur = tree.node(i);
      ImagePair succ{image(a, cur.first, l), image(b, cur.second, map[l])};
      auto [idx, fresh] = tree.discover(std::move(succ), i, l);
      if (!fresh) continue;
      if (separates(tree.node(idx)))
        return DecisionOutcome::make(Verdict::fails, a, b, a.decode(tree.path_to(idx)), expanded);
      if (tree.size() > limits.pair_cap) throw CapExceeded("inclusion search", limits.pair_cap, tree.size());
    }
  }
  return DecisionOutcome::make(Verdict::holds, a, b, std::nullopt, expanded);
}

DecisionOutcome syn_equality(const Dfa& a, const Dfa& b, const Limits& limits) {
  const DecisionOutcome forward = syn_inclusion(a, b, limits);
  if (!forward.holds()) return forward;
  const DecisionOutcome backward = syn_inclusion(b, a, limits);
  return DecisionOutcome::make(backward.verdict, a, b, backward.witness,
                               forward.nodes_expanded + backward.nodes_expanded);
}

DecisionOutcome syn_strict_inclusion(const Dfa& a, const Dfa& b, const Limits& limits) {
  const Dfa both = product_sync(a, b);
  // Syn(a) = Syn(a) ∩ Syn(b) is exactly Syn(a) ⊆ Syn(b).
  const DecisionOutcome contained = syn_equality(a, both, limits);
  if (!contained.holds()) {
    return DecisionOutcome::make(Verdict::fails, a, b, contained.witness, contained.nodes_expanded);
  }
  const DecisionOutcome same = syn_equality(a, b, limits);
  const std::size_t nodes = contained.nodes_expanded + same.nodes_expanded;
  if (same.holds()) return DecisionOutcome::make(Verdict::fails, a, b, std::nullopt, nodes);
  return DecisionOutcome::make(Verdict::holds, a, b, same.witness, nodes);
}

IdealCheck check_ideal(const Dfa& acceptor, const Limits& limits) {
  if (!acceptor.is_acceptor()) throw Error("automaton has no initial state");
  std::vector<ExtraEdge> loops;
  for (Letter a = 0; a < acceptor.num_letters(); ++a) {
    loops.push_back({*acceptor.initial(), a, *acceptor.initial()});
    for (State f : acceptor.finals()) loops.push_back({f, a, f});
  }
  const Dfa closure = determinize_subset(acceptor, loops, limits);
  const Equivalence eq = equivalent(acceptor, closure);
  return {eq.equivalent, eq.witness};
}

bool is_ideal(const Dfa& acceptor, const Limits& limits) { return check_ideal(acceptor, limits).ideal; }

std::optional<Word> intersection_nonempty(const ReductionInstance& inst, const Limits& limits) {
  return shortest_accepted_word(product_acceptors(inst.components(), limits));
}

}  // namespace syncaut
