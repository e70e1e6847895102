/*******************************************************************************
 * Partition helpers.
 *
 * @file:   partition.cc
 ******************************************************************************/
#include "lmpart/partition.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lmpart {
NodeWeight Partition::max_block_weight() const {
  return block_weights.empty() ? 0 : *std::max_element(block_weights.begin(), block_weights.end());
}

Partition make_partition(const Graph &graph, const BlockID k, std::vector<BlockID> assignment) {
  if (k == 0) {
    throw std::invalid_argument("a partition needs at least one block");
  }
  if (assignment.size() != graph.n()) {
    throw std::invalid_argument("partition size does not match the number of nodes");
  }
  Partition partition{.k = k, .assignment = std::move(assignment), .block_weights = {}};
  partition.block_weights.assign(k, 0);
  for (NodeID u = 0; u < graph.n(); ++u) {
    const BlockID b = partition.assignment[u];
    if (b >= k) {
      throw std::invalid_argument("block id " + std::to_string(b) + " out of range");
    }
    partition.block_weights[b] += graph.node_weight(u);
  }
  return partition;
}

NodeWeight BalanceSpec::max_block_weight_floor() const {
  // Guard against (1 + eps) * w landing just below an integer.
  return static_cast<NodeWeight>(std::floor(max_block_weight() * (1.0 + 1e-12)));
}

BalanceSpec make_balance(const Graph &graph, const BlockID k, const double epsilon) {
  if (k == 0) {
    throw std::invalid_argument("k must be positive");
  }
  if (!(epsilon >= 0.0)) {
    throw std::invalid_argument("epsilon must be non-negative");
  }
  return {.epsilon = epsilon, .k = k, .total_weight = graph.total_node_weight()};
}

BlockSubgraph extract_block(const Graph &graph, const std::span<const BlockID> assignment,
                            const BlockID block) {
  std::vector<NodeID> to_local(graph.n(), kInvalidNodeID);
  BlockSubgraph result;
  for (NodeID u = 0; u < graph.n(); ++u) {
    if (assignment[u] == block) {
      to_local[u] = static_cast<NodeID>(result.to_parent.size());
      result.to_parent.push_back(u);
    }
  }

  const NodeID sub_n = static_cast<NodeID>(result.to_parent.size());
  std::vector<EdgeID> offsets(sub_n + 1, 0);
  std::vector<NodeID> targets;
  std::vector<EdgeWeight> edge_weights;
  std::vector<NodeWeight> node_weights(sub_n);

  for (NodeID local = 0; local < sub_n; ++local) {
    const NodeID u = result.to_parent[local];
    node_weights[local] = graph.node_weight(u);
    for (EdgeID e = graph.first_edge(u); e < graph.first_invalid_edge(u); ++e) {
      const NodeID v = graph.edge_target(e);
      if (assignment[v] == block) {
        // Local ids preserve the relative order, so rows stay sorted.
        targets.push_back(to_local[v]);
        edge_weights.push_back(graph.edge_weight(e));
      }
    }
    offsets[local + 1] = targets.size();
  }

  result.graph = Graph(std::move(offsets), std::move(targets), std::move(edge_weights),
                       std::move(node_weights));
  return result;
}
} // namespace lmpart
