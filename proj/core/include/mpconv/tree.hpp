#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mpconv/sequence.hpp"

namespace mpconv {

/// Rooted tree on nodes 0..n-1 with a non-negative weight per node.
class WeightedTree {
 public:
  static constexpr std::int64_t kNoParent = -1;

  /// parents[v] is the parent of v, or kNoParent for the single root.
  /// Throws InvalidInput unless the parent links form one rooted tree and all
  /// weights are non-negative.
  WeightedTree(std::vector<std::int64_t> parents, std::vector<Value> weights);

  std::size_t size() const { return weights_.size(); }
  std::size_t root() const { return root_; }
  Value weight(std::size_t v) const { return weights_[v]; }
  std::int64_t parent(std::size_t v) const { return parents_[v]; }
  std::span<const std::size_t> children(std::size_t v) const {
    return children_[v];
  }

  /// Nodes in an order where every parent precedes its children.
  std::span<const std::size_t> preorder() const { return preorder_; }

  /// Number of nodes in the subtree of every node.
  std::vector<std::size_t> subtree_sizes() const;

  const std::vector<std::int64_t>& parents() const { return parents_; }
  const std::vector<Value>& weights() const { return weights_; }

  friend bool operator==(const WeightedTree& a, const WeightedTree& b) {
    return a.parents_ == b.parents_ && a.weights_ == b.weights_;
  }

 private:
  std::vector<std::int64_t> parents_;
  std::vector<Value> weights_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> preorder_;
  std::size_t root_ = 0;
};

/// Sparsity vector of the root: entry k is the largest total weight of a
/// connected node set of size exactly k that contains the root, k = 0..n.
/// Textbook O(n^2) tree knapsack over children.
std::vector<Value> tree_sparsity_dp(const WeightedTree& tree);

/// Single entry of tree_sparsity_dp. Throws InvalidInput when k > n.
Value tree_sparsity_dp(const WeightedTree& tree, std::size_t k);

}  // namespace mpconv
