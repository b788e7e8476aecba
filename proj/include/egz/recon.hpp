#pragma once

#include "egz/frobenius.hpp"

#include <cstdint>
#include <vector>

namespace egz {

using NodeId = std::uint32_t;

enum class NodeKind : std::uint8_t { Leaf, Extend, Merge };

/// One node of a reconstruction tree. Field meaning depends on `kind`:
///   Leaf:   a = input index
///   Extend: a = child, b = new input index, len = child length
///   Merge:  a = temporary-side child, b = active-side child, len = plan slot
struct ReconNode {
  NodeKind kind;
  std::uint32_t a;
  std::uint32_t b;
  std::uint64_t len;
};

struct CoefficientQuery {
  NodeId node;
  std::uint64_t t;
};

/// Pool of immutable reconstruction trees for one solver run. A tree rooted at
/// a component's node maps a coefficient t to input indices whose differences
/// sum to xi + t*v.
class ReconForest {
 public:
  void clear();
  void reserve(std::size_t nodes);

  NodeId add_leaf(std::uint32_t input_index);
  NodeId add_extend(NodeId child, std::uint64_t child_len, std::uint32_t new_index);
  NodeId add_merge(NodeId left, NodeId right, const MergePlan& plan);

  std::size_t size() const { return nodes_.size(); }
  const ReconNode& node(NodeId id) const { return nodes_[id]; }
  const MergePlan& plan_of(const ReconNode& n) const { return plans_[n.len]; }

  /// Largest coefficient the node accepts (untruncated for merges).
  std::uint64_t max_coefficient(NodeId id) const;

  /// Appends R(t) for the tree at `root` to `sink`; returns the number of nodes
  /// visited. Iterative, so tree depth is not bounded by the call stack.
  std::size_t expand(NodeId root, std::uint64_t t, std::vector<std::uint32_t>& sink,
                     std::vector<CoefficientQuery>& stack) const;
  std::size_t expand(NodeId root, std::uint64_t t, std::vector<std::uint32_t>& sink) const;

 private:
  std::vector<ReconNode> nodes_;
  std::vector<MergePlan> plans_;
};

}  // namespace egz
