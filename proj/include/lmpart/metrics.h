/*******************************************************************************
 * Partition objectives: edge cut and balance.
 *
 * @file:   metrics.h
 ******************************************************************************/
#pragma once

#include <span>

#include "lmpart/graph.h"
#include "lmpart/partition.h"

namespace lmpart {
// Total weight of edges between different blocks, each undirected edge counted
// once.
[[nodiscard]] EdgeWeight cut(const Graph &graph, std::span<const BlockID> assignment);
[[nodiscard]] EdgeWeight cut(const Graph &graph, const Partition &partition);

struct Imbalance {
  NodeWeight max_block_weight = 0;
  // max_i c(V_i) / ceil(c(V) / k)
  double ratio = 0.0;
  bool feasible = true;
};

[[nodiscard]] Imbalance imbalance(const Partition &partition, const BalanceSpec &balance);
[[nodiscard]] Imbalance imbalance(const Graph &graph, const Partition &partition,
                                  const BalanceSpec &balance);
} // namespace lmpart
