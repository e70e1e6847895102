/*******************************************************************************
 * Size-constrained label propagation refinement and partition projection.
 *
 * @file:   refinement.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lmpart/graph.h"
#include "lmpart/partition.h"

namespace lmpart {
// Optional bookkeeping used by the test suites to check that refinement never
// worsens the cut and that projections preserve it.
struct QualityTrace {
  std::uint64_t refine_calls = 0;
  std::uint64_t cut_increases = 0;
  std::uint64_t max_weight_increases = 0;
  std::uint64_t projections = 0;
  std::uint64_t projection_mismatches = 0;
};

// A node moves to the adjacent block with the strongest connection if that
// connection strictly exceeds the one to its current block and the target
// block stays within its weight limit. Ties go to the lowest block id. Blocks
// are never emptied.
[[nodiscard]] Partition lp_refine(const Graph &graph, Partition partition,
                                  std::span<const NodeWeight> max_block_weights,
                                  std::uint32_t max_rounds, std::uint64_t seed,
                                  QualityTrace *trace = nullptr);

[[nodiscard]] Partition lp_refine(const Graph &graph, Partition partition,
                                  const BalanceSpec &balance, std::uint32_t max_rounds = 5,
                                  std::uint64_t seed = 1, QualityTrace *trace = nullptr);

// Fine node v inherits the block of fine_to_coarse[v]. The fine node weights
// are needed to recompute block weights.
[[nodiscard]] Partition project(const Graph &fine, std::span<const NodeID> fine_to_coarse,
                                const Partition &coarse_partition);
} // namespace lmpart
