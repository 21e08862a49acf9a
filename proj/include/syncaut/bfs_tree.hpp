#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "syncaut/dfa.hpp"

namespace syncaut {

/// Breadth-first discovery record with backpointers. Nodes are numbered in
/// discovery order; when every node is expanded in that order with letters in
/// alphabet order, the path to each node is its shortest, lexicographically
/// least access word.
template <class Node, class Hash = std::hash<Node>>
class BfsTree {
 public:
  static constexpr std::size_t root_parent = static_cast<std::size_t>(-1);

  /// Inserts `node` if new. Returns its index and whether it was inserted.
  std::pair<std::size_t, bool> discover(Node node, std::size_t parent, Letter via) {
    auto [it, fresh] = index_.try_emplace(std::move(node), nodes_.size());
    if (fresh) {
      nodes_.push_back(&it->first);
      parents_.push_back(parent);
      letters_.push_back(via);
    }
    return {it->second, fresh};
  }

  std::pair<std::size_t, bool> discover_root(Node node) { return discover(std::move(node), root_parent, 0); }

  std::size_t size() const noexcept { return nodes_.size(); }
  const Node& node(std::size_t i) const { return *nodes_[i]; }
  std::optional<std::size_t> find(const Node& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Letters spelled from the root to node `i`.
  LetterString path_to(std::size_t i) const {
    LetterString w;
    for (; parents_[i] != root_parent; i = parents_[i]) w.push_back(letters_[i]);
    std::reverse(w.begin(), w.end());
    return w;
  }

 private:
  // unordered_map never relocates its nodes, so the pointers stay valid.
  std::unordered_map<Node, std::size_t, Hash> index_;
  std::vector<const Node*> nodes_;
  std::vector<std::size_t> parents_;
  std::vector<Letter> letters_;
};

}  // namespace syncaut
