/*******************************************************************************
 * k-way partitions and the balance constraint.
 *
 * @file:   partition.h
 ******************************************************************************/
#pragma once

#include <span>
#include <vector>

#include "lmpart/graph.h"

namespace lmpart {
struct Partition {
  BlockID k = 1;
  std::vector<BlockID> assignment;
  std::vector<NodeWeight> block_weights;

  [[nodiscard]] BlockID block(const NodeID u) const {
    return assignment[u];
  }

  [[nodiscard]] NodeWeight max_block_weight() const;
};

// Computes block weights; throws std::invalid_argument if the assignment does
// not cover the graph or uses ids outside [0, k).
[[nodiscard]] Partition make_partition(const Graph &graph, BlockID k,
                                       std::vector<BlockID> assignment);

// c(V_i) <= L_max := (1 + epsilon) * ceil(c(V) / k).
struct BalanceSpec {
  double epsilon = 0.03;
  BlockID k = 1;
  NodeWeight total_weight = 0;

  [[nodiscard]] NodeWeight perfect_block_weight() const {
    return (total_weight + k - 1) / k;
  }

  [[nodiscard]] double max_block_weight() const {
    return (1.0 + epsilon) * static_cast<double>(perfect_block_weight());
  }

  // Largest integral block weight satisfying the constraint.
  [[nodiscard]] NodeWeight max_block_weight_floor() const;
};

[[nodiscard]] BalanceSpec make_balance(const Graph &graph, BlockID k, double epsilon);

// Subgraph induced by the nodes of one block, plus the mapping from subgraph
// node ids to graph node ids.
struct BlockSubgraph {
  Graph graph;
  std::vector<NodeID> to_parent;
};

[[nodiscard]] BlockSubgraph extract_block(const Graph &graph, std::span<const BlockID> assignment,
                                          BlockID block);
} // namespace lmpart
