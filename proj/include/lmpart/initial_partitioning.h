/*******************************************************************************
 * Initial partitioning of the coarsest graph by recursive bipartitioning.
 *
 * Each bipartition grows one block greedily from a random seed node, then
 * polishes the split with 2-way label propagation; the best of several seeded
 * attempts is kept.
 *
 * @file:   initial_partitioning.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <utility>

#include "lmpart/graph.h"
#include "lmpart/partition.h"
#include "lmpart/refinement.h"

namespace lmpart {
struct BipartitionParams {
  std::uint32_t attempts = 4;
  std::uint32_t refine_rounds = 5;
};

struct InitialPartitionResult {
  Partition partition;
  // False if some block exceeds its weight limit. The partition is still the
  // best effort.
  bool feasible = true;
};

// weight_targets must sum to c(V). Block i may weigh up to
// (1 + eps_local) * weight_targets[i].
[[nodiscard]] InitialPartitionResult bipartition(const Graph &graph,
                                                 std::pair<double, double> weight_targets,
                                                 double eps_local, std::uint64_t seed,
                                                 const BipartitionParams &params = {},
                                                 QualityTrace *trace = nullptr);

// Imbalance budget for a subproblem of weight `subgraph_weight` that is still
// to be split into `sub_k` blocks, such that the final blocks respect the
// global limit.
[[nodiscard]] double adaptive_epsilon(const BalanceSpec &balance, NodeWeight subgraph_weight,
                                      BlockID sub_k);

[[nodiscard]] InitialPartitionResult recursive_bipartition(const Graph &graph, BlockID k,
                                                           const BalanceSpec &balance,
                                                           std::uint64_t seed,
                                                           const BipartitionParams &params = {},
                                                           QualityTrace *trace = nullptr);
} // namespace lmpart
