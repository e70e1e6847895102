/*******************************************************************************
 * Label propagation refinement.
 *
 * @file:   refinement.cc
 ******************************************************************************/
#include "lmpart/refinement.h"

#include <algorithm>
#include <stdexcept>

#include "lmpart/metrics.h"
#include "lmpart/random.h"

namespace lmpart {
Partition lp_refine(const Graph &graph, Partition partition,
                    const std::span<const NodeWeight> max_block_weights,
                    const std::uint32_t max_rounds, const std::uint64_t seed, QualityTrace *trace) {
  const BlockID k = partition.k;
  if (max_block_weights.size() != k) {
    throw std::invalid_argument("one weight limit per block is required");
  }

  EdgeWeight cut_before = 0;
  NodeWeight max_before = 0;
  if (trace != nullptr) {
    cut_before = cut(graph, partition);
    max_before = partition.max_block_weight();
  }

  auto &assignment = partition.assignment;
  auto &block_weights = partition.block_weights;
  std::vector<EdgeWeight> connection(k, 0);
  std::vector<BlockID> touched;

  Random rng(mix_seed(seed, 0x4e));
  const std::vector<NodeID> order = rng.permutation(graph.n());

  for (std::uint32_t round = 0; round < max_rounds && k > 1; ++round) {
    std::size_t moves = 0;

    for (const NodeID u : order) {
      const auto neighbors = graph.neighbors(u);
      const auto weights = graph.neighbor_weights(u);
      for (std::size_t i = 0; i < neighbors.size(); ++i) {
        const BlockID b = assignment[neighbors[i]];
        if (connection[b] == 0) {
          touched.push_back(b);
        }
        connection[b] += weights[i];
      }

      const BlockID own = assignment[u];
      const NodeWeight u_weight = graph.node_weight(u);
      BlockID best = own;
      EdgeWeight best_connection = connection[own];
      // Node weights are positive, so this keeps the last node of a block.
      const bool sole_member = block_weights[own] == u_weight;
      for (const BlockID b : touched) {
        if (b == own || sole_member || block_weights[b] + u_weight > max_block_weights[b]) {
          continue;
        }
        if (connection[b] > best_connection ||
            (best != own && connection[b] == best_connection && b < best)) {
          best = b;
          best_connection = connection[b];
        }
      }

      if (best != own) {
        block_weights[own] -= u_weight;
        block_weights[best] += u_weight;
        assignment[u] = best;
        ++moves;
      }

      for (const BlockID b : touched) {
        connection[b] = 0;
      }
      touched.clear();
    }

    if (moves == 0) {
      break;
    }
  }

  if (trace != nullptr) {
    ++trace->refine_calls;
    if (cut(graph, partition) > cut_before) {
      ++trace->cut_increases;
    }
    // Moves only target blocks below their limit, so the heaviest block can
    // only grow up to the largest limit.
    const NodeWeight limit =
        std::max(max_before, *std::max_element(max_block_weights.begin(), max_block_weights.end()));
    if (partition.max_block_weight() > limit) {
      ++trace->max_weight_increases;
    }
  }
  return partition;
}

Partition lp_refine(const Graph &graph, Partition partition, const BalanceSpec &balance,
                    const std::uint32_t max_rounds, const std::uint64_t seed,
                    QualityTrace *trace) {
  const std::vector<NodeWeight> limits(partition.k, balance.max_block_weight_floor());
  return lp_refine(graph, std::move(partition), limits, max_rounds, seed, trace);
}

Partition project(const Graph &fine, const std::span<const NodeID> fine_to_coarse,
                  const Partition &coarse_partition) {
  if (fine_to_coarse.size() != fine.n()) {
    throw std::invalid_argument("mapping does not cover the fine graph");
  }
  std::vector<BlockID> assignment(fine.n());
  for (NodeID u = 0; u < fine.n(); ++u) {
    const NodeID coarse = fine_to_coarse[u];
    if (coarse >= coarse_partition.assignment.size()) {
      throw std::out_of_range("coarse node id " + std::to_string(coarse) + " out of range");
    }
    assignment[u] = coarse_partition.assignment[coarse];
  }
  return make_partition(fine, coarse_partition.k, std::move(assignment));
}
} // namespace lmpart
