#include "mpconv/tree_sparsity.hpp"

#include <algorithm>
#include <limits>

namespace mpconv {
namespace {

constexpr Value kUnset = std::numeric_limits<Value>::min();

struct Spine {
  std::vector<std::size_t> nodes;
  std::vector<std::vector<Value>> light;  // u^i per spine node
  std::vector<Value> prefix;              // prefix[i] = x(s_0) + ... + x(s_{i-1})
};

struct SpineBlock {
  std::vector<Value> light;   // u^{a,b}
  std::vector<Value> rooted;  // y^{a,b}
};

class SpineSolver {
 public:
  SpineSolver(const WeightedTree& tree, const ConvKernel& kernel)
      : tree_(tree), kernel_(kernel), sizes_(tree.subtree_sizes()) {}

  std::vector<Value> head_vector(std::size_t head) {
    Spine spine;
    for (std::size_t v = head;;) {
      spine.nodes.push_back(v);
      const auto kids = tree_.children(v);
      if (kids.empty()) break;
      const std::size_t heavy = *std::max_element(
          kids.begin(), kids.end(),
          [&](std::size_t p, std::size_t q) { return sizes_[p] < sizes_[q]; });
      std::vector<Value> u{0};
      for (std::size_t child : kids) {
        if (child == heavy) continue;
        u = max_conv(u, head_vector(child), std::nullopt, kernel_);
      }
      spine.light.push_back(std::move(u));
      v = heavy;
    }
    spine.light.emplace_back(std::vector<Value>{0});  // the leaf ending the spine

    const std::size_t len = spine.nodes.size();
    spine.prefix.assign(len + 1, 0);
    for (std::size_t i = 0; i < len; ++i) {
      spine.prefix[i + 1] =
          checked_add(spine.prefix[i], tree_.weight(spine.nodes[i]));
    }
    return solve(spine, 0, len - 1).rooted;
  }

 private:
  SpineBlock solve(const Spine& spine, std::size_t a, std::size_t b) {
    const std::vector<Value>& ua = spine.light[a];
    if (a == b) {
      std::vector<Value> y(ua.size() + 1);
      y[0] = 0;
      const Value x = tree_.weight(spine.nodes[a]);
      for (std::size_t k = 1; k < y.size(); ++k) {
        y[k] = checked_add(x, ua[k - 1]);
      }
      return {ua, std::move(y)};
    }
    const std::size_t c = (a + b) / 2;
    SpineBlock left = solve(spine, a, c);
    SpineBlock right = solve(spine, c + 1, b);

    const std::size_t span_len = c - a + 1;
    const Value span_weight = checked_sub(spine.prefix[c + 1], spine.prefix[a]);
    const auto through =
        max_conv(left.light, right.rooted, std::nullopt, kernel_);

    std::vector<Value> y(std::max(left.rooted.size(), span_len + through.size()),
                         kUnset);
    std::copy(left.rooted.begin(), left.rooted.end(), y.begin());
    for (std::size_t k = 0; k < through.size(); ++k) {
      Value& slot = y[span_len + k];
      slot = std::max(slot, checked_add(span_weight, through[k]));
    }
    return {max_conv(left.light, right.light, std::nullopt, kernel_),
            std::move(y)};
  }

  const WeightedTree& tree_;
  const ConvKernel& kernel_;
  std::vector<std::size_t> sizes_;
};

}  // namespace

std::vector<Value> tree_sparsity_via_maxconv(const WeightedTree& tree,
                                             const ConvKernel& kernel) {
  SpineSolver solver(tree, kernel);
  return solver.head_vector(tree.root());
}

std::vector<std::vector<std::size_t>> spine_decomposition(
    const WeightedTree& tree) {
  const auto sizes = tree.subtree_sizes();
  std::vector<std::vector<std::size_t>> spines;
  std::vector<std::size_t> heads{tree.root()};
  for (std::size_t h = 0; h < heads.size(); ++h) {
    std::vector<std::size_t> spine;
    for (std::size_t v = heads[h];;) {
      spine.push_back(v);
      const auto kids = tree.children(v);
      if (kids.empty()) break;
      const std::size_t heavy = *std::max_element(
          kids.begin(), kids.end(),
          [&](std::size_t p, std::size_t q) { return sizes[p] < sizes[q]; });
      for (std::size_t child : kids) {
        if (child != heavy) heads.push_back(child);
      }
      v = heavy;
    }
    spines.push_back(std::move(spine));
  }
  return spines;
}

}  // namespace mpconv
