/*******************************************************************************
 * Edge cut and imbalance.
 *
 * @file:   metrics.cc
 ******************************************************************************/
#include "lmpart/metrics.h"

#include <stdexcept>

namespace lmpart {
EdgeWeight cut(const Graph &graph, const std::span<const BlockID> assignment) {
  if (assignment.size() != graph.n()) {
    throw std::invalid_argument("assignment size does not match the number of nodes");
  }
  EdgeWeight total = 0;
  for (NodeID u = 0; u < graph.n(); ++u) {
    const BlockID bu = assignment[u];
    for (EdgeID e = graph.first_edge(u); e < graph.first_invalid_edge(u); ++e) {
      const NodeID v = graph.edge_target(e);
      if (u < v && assignment[v] != bu) {
        total += graph.edge_weight(e);
      }
    }
  }
  return total;
}

EdgeWeight cut(const Graph &graph, const Partition &partition) {
  return cut(graph, partition.assignment);
}

Imbalance imbalance(const Partition &partition, const BalanceSpec &balance) {
  Imbalance result;
  result.max_block_weight = partition.max_block_weight();
  const NodeWeight perfect = balance.perfect_block_weight();
  result.ratio = perfect > 0 ? static_cast<double>(result.max_block_weight) / perfect : 0.0;
  result.feasible = result.max_block_weight <= balance.max_block_weight_floor();
  return result;
}

Imbalance imbalance(const Graph &graph, const Partition &partition, const BalanceSpec &balance) {
  return imbalance(make_partition(graph, partition.k, partition.assignment), balance);
}
} // namespace lmpart
