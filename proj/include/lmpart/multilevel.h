/*******************************************************************************
 * Multilevel partitioning with sparsification-gated coarsening.
 *
 * Coarsening repeatedly clusters and contracts the current graph with a
 * cluster weight limit of U = c(V) / (160 k), capping the node reduction per
 * step at 2.5x. After each contraction, the coarse graph is sparsified to
 * m_hat edges if it has more than rho * m_hat edges. Coarsening stops at 160 k
 * nodes or once a step shrinks the graph by less than min_shrink. The coarsest
 * graph is partitioned by recursive bipartitioning, and the partition is
 * projected back level by level and refined with label propagation.
 *
 * @file:   multilevel.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "lmpart/clustering.h"
#include "lmpart/graph.h"
#include "lmpart/initial_partitioning.h"
#include "lmpart/partition.h"
#include "lmpart/refinement.h"
#include "lmpart/sparsification.h"

namespace lmpart {
struct PartitionerConfig {
  BlockID k = 2;
  double epsilon = 0.03;
  SparsifyConfig sparsify;
  // Rounds and shrink cap for coarsening; the weight limit is derived from
  // coarsening_target_factor.
  ClusteringParams clustering;
  double coarsening_target_factor = 160.0;
  // Below this many nodes per block, geometric shrinking is no longer
  // guaranteed by the 2-hop clustering bound.
  double coarsest_stop_factor = 320.0;
  double min_shrink = 1.05;
  std::uint32_t refine_rounds = 5;
  BipartitionParams bipartition;
  std::uint64_t seed = 1;

  // Test instrumentation: keep pre-sparsification graphs and record refinement
  // and projection checks in the run statistics.
  bool trace = false;
};

struct HierarchyLevel {
  Graph graph;
  // Maps the nodes of the previous (finer) level to nodes of this level.
  // Empty for the input level.
  std::vector<NodeID> fine_to_coarse;
  bool sparsified = false;
  EdgeID pre_sparsify_edges = 0;
  EdgeID target_edges = 0;
  SamplingMoments sampling;
  // Contracted graph before sparsification; only kept in trace mode.
  std::optional<Graph> unsparsified;
};

struct Hierarchy {
  std::vector<HierarchyLevel> levels;
  NodeWeight max_cluster_weight = 1;

  [[nodiscard]] std::size_t size() const {
    return levels.size();
  }

  [[nodiscard]] const Graph &coarsest() const {
    return levels.back().graph;
  }
};

[[nodiscard]] NodeWeight max_cluster_weight(const Graph &graph, const PartitionerConfig &cfg);

// Clustering parameters used to coarsen level `level - 1` of the hierarchy of
// `input`.
[[nodiscard]] ClusteringParams
coarsening_params(const Graph &input, const PartitionerConfig &cfg, std::size_t level);

// The hierarchy stores a copy of the input graph as its first level.
[[nodiscard]] Hierarchy build_hierarchy(const Graph &graph, const PartitionerConfig &cfg);

struct LevelStats {
  NodeID n = 0;
  EdgeID m = 0;
  bool sparsified = false;
  EdgeID pre_sparsify_m = 0;
  EdgeID target_m = 0;
  double sampling_stddev = 0.0;
};

struct PhaseSeconds {
  double coarsening = 0.0;
  double sparsification = 0.0;
  double initial = 0.0;
  double refinement = 0.0;
};

struct RunStats {
  PartitionerConfig config;
  std::vector<LevelStats> levels;
  PhaseSeconds seconds;
  EdgeWeight cut = 0;
  double imbalance = 0.0;
  NodeWeight max_block_weight = 0;
  bool feasible = true;
  std::optional<QualityTrace> trace;
};

struct PartitionResult {
  Partition partition;
  RunStats stats;
};

[[nodiscard]] PartitionResult partition(const Graph &graph, const PartitionerConfig &cfg);

[[nodiscard]] std::vector<LevelStats> level_stats(const Hierarchy &hierarchy);

// Wall-clock timings are only included on request so that repeated runs
// produce identical documents.
[[nodiscard]] nlohmann::ordered_json to_json(const RunStats &stats, bool include_timings);
[[nodiscard]] nlohmann::ordered_json to_json(const PartitionerConfig &cfg);
} // namespace lmpart
