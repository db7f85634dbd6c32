#include "mpconv/tree.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace mpconv {

WeightedTree::WeightedTree(std::vector<std::int64_t> parents,
                           std::vector<Value> weights)
    : parents_(std::move(parents)), weights_(std::move(weights)) {
  const std::size_t n = weights_.size();
  if (n == 0) throw InvalidInput("tree must have at least one node");
  if (parents_.size() != n) {
    throw InvalidInput("tree: parents and weights differ in length");
  }
  children_.resize(n);
  std::size_t roots = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (weights_[v] < 0) throw InvalidInput("tree weights must be >= 0");
    const std::int64_t p = parents_[v];
    if (p == kNoParent) {
      root_ = v;
      ++roots;
    } else if (p < 0 || static_cast<std::size_t>(p) >= n ||
               static_cast<std::size_t>(p) == v) {
      throw InvalidInput("tree: bad parent for node " + std::to_string(v));
    } else {
      children_[static_cast<std::size_t>(p)].push_back(v);
    }
  }
  if (roots != 1) throw InvalidInput("tree must have exactly one root");
  preorder_.reserve(n);
  preorder_.push_back(root_);
  for (std::size_t head = 0; head < preorder_.size(); ++head) {
    for (std::size_t c : children_[preorder_[head]]) preorder_.push_back(c);
  }
  // Nodes on a cycle are never reached from the root.
  if (preorder_.size() != n) throw InvalidInput("tree contains a cycle");
  max_abs(weights_);
}

std::vector<std::size_t> WeightedTree::subtree_sizes() const {
  std::vector<std::size_t> sizes(size(), 1);
  for (std::size_t idx = preorder_.size(); idx-- > 1;) {
    const std::size_t v = preorder_[idx];
    sizes[static_cast<std::size_t>(parents_[v])] += sizes[v];
  }
  return sizes;
}

std::vector<Value> tree_sparsity_dp(const WeightedTree& tree) {
  constexpr Value kNone = std::numeric_limits<Value>::min();
  const std::size_t n = tree.size();
  std::vector<std::vector<Value>> vec(n);
  const auto order = tree.preorder();
  for (std::size_t idx = n; idx-- > 0;) {
    const std::size_t v = order[idx];
    // cur[k]: best connected set of size k rooted at v using the children
    // merged so far.
    std::vector<Value> cur{0, tree.weight(v)};
    for (std::size_t child : tree.children(v)) {
      const std::vector<Value>& sub = vec[child];
      std::vector<Value> merged(cur.size() + sub.size() - 1, kNone);
      merged[0] = 0;
      for (std::size_t k1 = 1; k1 < cur.size(); ++k1) {
        if (cur[k1] == kNone) continue;
        for (std::size_t k2 = 0; k2 < sub.size(); ++k2) {
          merged[k1 + k2] =
              std::max(merged[k1 + k2], checked_add(cur[k1], sub[k2]));
        }
      }
      cur = std::move(merged);
      vec[child].clear();
      vec[child].shrink_to_fit();
    }
    vec[v] = std::move(cur);
  }
  return std::move(vec[tree.root()]);
}

Value tree_sparsity_dp(const WeightedTree& tree, std::size_t k) {
  if (k > tree.size()) {
    throw InvalidInput("tree sparsity: k exceeds the number of nodes");
  }
  return tree_sparsity_dp(tree)[k];
}

}  // namespace mpconv
