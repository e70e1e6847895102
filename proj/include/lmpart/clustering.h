/*******************************************************************************
 * Size-constrained label propagation, 2-hop clustering and isolated node
 * packing. Together they produce the clustering that is contracted in each
 * coarsening step.
 *
 * With a cluster weight limit U >= 2 c(V) / |V|, a converged run on a graph
 * without isolated nodes yields at most |V| / 2 + c(V) / U clusters.
 *
 * @file:   clustering.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "lmpart/graph.h"

namespace lmpart {
struct Clustering {
  std::vector<ClusterID> assignment;
  std::vector<NodeWeight> cluster_weights;

  [[nodiscard]] ClusterID cluster_count() const {
    return static_cast<ClusterID>(cluster_weights.size());
  }
};

constexpr std::uint32_t kRunToConvergence = std::numeric_limits<std::uint32_t>::max();
constexpr double kNoShrinkCap = std::numeric_limits<double>::infinity();

struct ClusteringParams {
  NodeWeight max_cluster_weight = 1;
  std::uint32_t max_rounds = 5;
  // Upper bound on the node reduction factor of one coarsening step. Merges
  // stop once the cluster count reaches ceil(n / shrink_cap).
  double shrink_cap = 2.5;
  std::uint64_t seed = 1;
};

// Renumbers clusters densely in order of first appearance and recomputes the
// cluster weights.
[[nodiscard]] Clustering compact_clustering(const Graph &graph,
                                            std::span<const ClusterID> assignment);

[[nodiscard]] Clustering singleton_clustering(const Graph &graph);

// Smallest cluster count permitted by the shrink cap.
[[nodiscard]] ClusterID min_cluster_count(NodeID n, double shrink_cap);

[[nodiscard]] Clustering lp_cluster(const Graph &graph, const ClusteringParams &params);

// Merges singleton clusters that share the same favorite (most strongly
// connected) adjacent cluster, subject to the weight limit.
[[nodiscard]] Clustering two_hop_cluster(const Graph &graph, const Clustering &clustering,
                                         const ClusteringParams &params);

// Packs isolated singleton nodes into clusters of weight at most U.
[[nodiscard]] Clustering cluster_isolated(const Graph &graph, const Clustering &clustering,
                                          const ClusteringParams &params);

[[nodiscard]] Clustering coarsening_clustering(const Graph &graph, const ClusteringParams &params);
} // namespace lmpart
