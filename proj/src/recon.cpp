#include "egz/recon.hpp"

#include "egz/errors.hpp"

#include <string>

namespace egz {

void ReconForest::clear() {
  nodes_.clear();
  plans_.clear();
}

void ReconForest::reserve(std::size_t nodes) { nodes_.reserve(nodes); }

NodeId ReconForest::add_leaf(std::uint32_t input_index) {
  nodes_.push_back({NodeKind::Leaf, input_index, 0, 0});
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId ReconForest::add_extend(NodeId child, std::uint64_t child_len, std::uint32_t new_index) {
  nodes_.push_back({NodeKind::Extend, child, new_index, child_len});
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId ReconForest::add_merge(NodeId left, NodeId right, const MergePlan& plan) {
  plans_.push_back(plan);
  nodes_.push_back({NodeKind::Merge, left, right, plans_.size() - 1});
  return static_cast<NodeId>(nodes_.size() - 1);
}

std::uint64_t ReconForest::max_coefficient(NodeId id) const {
  const ReconNode& n = nodes_[id];
  switch (n.kind) {
    case NodeKind::Leaf: return 1;
    case NodeKind::Extend: return n.len + 1;
    case NodeKind::Merge: return plans_[n.len].L;
  }
  return 0;
}

std::size_t ReconForest::expand(NodeId root, std::uint64_t t, std::vector<std::uint32_t>& sink,
                                std::vector<CoefficientQuery>& stack) const {
  if (root >= nodes_.size()) throw InputError("unknown reconstruction node");
  if (t > max_coefficient(root)) {
    throw InputError("coefficient " + std::to_string(t) + " out of range for node " +
                     std::to_string(root));
  }
  std::size_t visited = 0;
  stack.clear();
  stack.push_back({root, t});
  while (!stack.empty()) {
    const CoefficientQuery q = stack.back();
    stack.pop_back();
    ++visited;
    const ReconNode& n = nodes_[q.node];
    switch (n.kind) {
      case NodeKind::Leaf:
        if (q.t == 1) sink.push_back(n.a);
        break;
      case NodeKind::Extend:
        if (q.t <= n.len) {
          stack.push_back({n.a, q.t});
        } else {
          sink.push_back(n.b);
          stack.push_back({n.a, n.len});
        }
        break;
      case NodeKind::Merge: {
        const BoundedRep rep = represent(plans_[n.len], q.t);
        stack.push_back({n.b, rep.beta});
        stack.push_back({n.a, rep.alpha});
        break;
      }
    }
  }
  return visited;
}

std::size_t ReconForest::expand(NodeId root, std::uint64_t t,
                                std::vector<std::uint32_t>& sink) const {
  std::vector<CoefficientQuery> stack;
  return expand(root, t, sink, stack);
}

}  // namespace egz
