/*******************************************************************************
 * Coarsening clustering.
 *
 * @file:   clustering.cc
 ******************************************************************************/
#include "lmpart/clustering.h"

#include <cmath>
#include <numeric>

#include "lmpart/random.h"

namespace lmpart {
namespace {
// Merge budget shared by all clustering stages of one coarsening step.
class ShrinkGuard {
public:
  ShrinkGuard(const NodeID n, const ClusterID current, const double shrink_cap)
      : _floor(min_cluster_count(n, shrink_cap)),
        _live(current) {}

  [[nodiscard]] bool may_merge() const {
    return _live > _floor;
  }

  void merged() {
    --_live;
  }

private:
  ClusterID _floor;
  ClusterID _live;
};

// Sparse accumulator for connection weights towards clusters or blocks.
class RatingMap {
public:
  explicit RatingMap(const std::size_t size) : _ratings(size, 0) {}

  void add(const ClusterID key, const EdgeWeight weight) {
    if (_ratings[key] == 0) {
      _touched.push_back(key);
    }
    _ratings[key] += weight;
  }

  [[nodiscard]] EdgeWeight operator[](const ClusterID key) const {
    return _ratings[key];
  }

  [[nodiscard]] const std::vector<ClusterID> &keys() const {
    return _touched;
  }

  void clear() {
    for (const ClusterID key : _touched) {
      _ratings[key] = 0;
    }
    _touched.clear();
  }

private:
  std::vector<EdgeWeight> _ratings;
  std::vector<ClusterID> _touched;
};

// Most strongly connected adjacent cluster other than the node's own cluster,
// restricted to clusters accepted by `eligible`. Ties go to the lowest id.
template <typename Eligible>
std::pair<ClusterID, EdgeWeight> best_cluster(const RatingMap &map, const ClusterID own,
                                              Eligible &&eligible) {
  ClusterID best = kInvalidNodeID;
  EdgeWeight best_rating = 0;
  for (const ClusterID cluster : map.keys()) {
    if (cluster == own || !eligible(cluster)) {
      continue;
    }
    const EdgeWeight rating = map[cluster];
    if (rating > best_rating || (rating == best_rating && cluster < best)) {
      best = cluster;
      best_rating = rating;
    }
  }
  return {best, best_rating};
}
} // namespace

ClusterID min_cluster_count(const NodeID n, const double shrink_cap) {
  if (!(shrink_cap < kNoShrinkCap) || shrink_cap <= 0.0) {
    return 0;
  }
  return static_cast<ClusterID>(std::ceil(static_cast<double>(n) / shrink_cap));
}

Clustering compact_clustering(const Graph &graph, const std::span<const ClusterID> assignment) {
  std::vector<ClusterID> remap(assignment.size(), kInvalidNodeID);
  Clustering result;
  result.assignment.resize(assignment.size());

  for (NodeID u = 0; u < assignment.size(); ++u) {
    ClusterID &target = remap[assignment[u]];
    if (target == kInvalidNodeID) {
      target = result.cluster_count();
      result.cluster_weights.push_back(0);
    }
    result.assignment[u] = target;
    result.cluster_weights[target] += graph.node_weight(u);
  }
  return result;
}

Clustering singleton_clustering(const Graph &graph) {
  Clustering result;
  result.assignment.resize(graph.n());
  std::iota(result.assignment.begin(), result.assignment.end(), ClusterID{0});
  const auto weights = graph.raw_node_weights();
  result.cluster_weights.assign(weights.begin(), weights.end());
  return result;
}

Clustering lp_cluster(const Graph &graph, const ClusteringParams &params) {
  const NodeID n = graph.n();
  const NodeWeight max_weight = params.max_cluster_weight;

  std::vector<ClusterID> cluster(n);
  std::iota(cluster.begin(), cluster.end(), ClusterID{0});
  std::vector<NodeWeight> weight(graph.raw_node_weights().begin(), graph.raw_node_weights().end());
  std::vector<NodeID> size(n, 1);

  ShrinkGuard guard(n, n, params.shrink_cap);
  RatingMap map(n);

  Random rng(mix_seed(params.seed, 0x1b));
  const std::vector<NodeID> order = rng.permutation(n);

  for (std::uint32_t round = 0; round < params.max_rounds; ++round) {
    std::size_t moves = 0;

    for (const NodeID u : order) {
      const auto neighbors = graph.neighbors(u);
      if (neighbors.empty()) {
        continue;
      }
      const auto weights = graph.neighbor_weights(u);
      for (std::size_t i = 0; i < neighbors.size(); ++i) {
        map.add(cluster[neighbors[i]], weights[i]);
      }

      const ClusterID own = cluster[u];
      const NodeWeight u_weight = graph.node_weight(u);
      const auto [target, rating] = best_cluster(map, own, [&](const ClusterID c) {
        return weight[c] + u_weight <= max_weight;
      });

      // The current cluster wins ties, so every move strictly increases the
      // intra-cluster edge weight and the process converges.
      const bool reduces = size[own] == 1;
      if (target != kInvalidNodeID && rating > map[own] && (!reduces || guard.may_merge())) {
        weight[own] -= u_weight;
        --size[own];
        weight[target] += u_weight;
        ++size[target];
        cluster[u] = target;
        if (reduces) {
          guard.merged();
        }
        ++moves;
      }
      map.clear();
    }

    if (moves == 0) {
      break;
    }
  }

  return compact_clustering(graph, cluster);
}

Clustering two_hop_cluster(const Graph &graph, const Clustering &clustering,
                           const ClusteringParams &params) {
  const NodeID n = graph.n();
  const ClusterID k = clustering.cluster_count();
  const NodeWeight max_weight = params.max_cluster_weight;

  std::vector<NodeID> size(k, 0);
  for (const ClusterID c : clustering.assignment) {
    ++size[c];
  }

  std::vector<ClusterID> cluster = clustering.assignment;
  std::vector<NodeWeight> weight = clustering.cluster_weights;
  ShrinkGuard guard(n, k, params.shrink_cap);
  RatingMap map(k);

  // Open joint cluster per favorite. When a singleton does not fit, the
  // lighter of the two stays open; a closed cluster that is still a singleton
  // therefore weighs more than U / 2.
  std::vector<ClusterID> open(k, kInvalidNodeID);

  for (NodeID u = 0; u < n; ++u) {
    const ClusterID own = clustering.assignment[u];
    if (size[own] != 1 || graph.degree(u) == 0) {
      continue;
    }

    const auto neighbors = graph.neighbors(u);
    const auto weights = graph.neighbor_weights(u);
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
      map.add(clustering.assignment[neighbors[i]], weights[i]);
    }
    const ClusterID favorite = best_cluster(map, own, [](ClusterID) { return true; }).first;
    map.clear();

    const NodeWeight u_weight = graph.node_weight(u);
    ClusterID &bin = open[favorite];
    if (bin == kInvalidNodeID) {
      bin = own;
    } else if (weight[bin] + u_weight <= max_weight && guard.may_merge()) {
      weight[bin] += u_weight;
      weight[own] = 0;
      cluster[u] = bin;
      guard.merged();
    } else if (u_weight < weight[bin]) {
      bin = own;
    }
  }

  return compact_clustering(graph, cluster);
}

Clustering cluster_isolated(const Graph &graph, const Clustering &clustering,
                            const ClusteringParams &params) {
  const NodeID n = graph.n();
  const ClusterID k = clustering.cluster_count();
  const NodeWeight max_weight = params.max_cluster_weight;

  std::vector<NodeID> size(k, 0);
  for (const ClusterID c : clustering.assignment) {
    ++size[c];
  }

  std::vector<ClusterID> cluster = clustering.assignment;
  std::vector<NodeWeight> weight = clustering.cluster_weights;
  ShrinkGuard guard(n, k, params.shrink_cap);

  ClusterID bin = kInvalidNodeID;
  for (NodeID u = 0; u < n; ++u) {
    const ClusterID own = clustering.assignment[u];
    const NodeWeight u_weight = graph.node_weight(u);
    if (graph.degree(u) != 0 || size[own] != 1 || u_weight > max_weight) {
      continue;
    }

    if (bin == kInvalidNodeID) {
      bin = own;
    } else if (weight[bin] + u_weight <= max_weight && guard.may_merge()) {
      weight[bin] += u_weight;
      cluster[u] = bin;
      guard.merged();
    } else if (u_weight < weight[bin]) {
      bin = own;
    }
  }

  return compact_clustering(graph, cluster);
}

Clustering coarsening_clustering(const Graph &graph, const ClusteringParams &params) {
  Clustering clustering = lp_cluster(graph, params);
  clustering = two_hop_cluster(graph, clustering, params);
  return cluster_isolated(graph, clustering, params);
}
} // namespace lmpart
