/*******************************************************************************
 * Cluster contraction via bucketed accumulation.
 *
 * @file:   contraction.cc
 ******************************************************************************/
#include "lmpart/contraction.h"

#include <numeric>

namespace lmpart {
namespace {
// Rows of a symmetric CSR graph with unsorted adjacency become sorted when the
// graph is transposed in source order, in linear time.
Graph sort_by_transposition(std::vector<EdgeID> offsets, const std::vector<NodeID> &targets,
                            const std::vector<EdgeWeight> &edge_weights,
                            std::vector<NodeWeight> node_weights) {
  const std::size_t n = node_weights.size();
  std::vector<NodeID> sorted_targets(targets.size());
  std::vector<EdgeWeight> sorted_weights(targets.size());
  std::vector<EdgeID> cursor(offsets.begin(), offsets.end() - 1);

  for (NodeID u = 0; u < n; ++u) {
    for (EdgeID e = offsets[u]; e < offsets[u + 1]; ++e) {
      const EdgeID pos = cursor[targets[e]]++;
      sorted_targets[pos] = u;
      sorted_weights[pos] = edge_weights[e];
    }
  }
  return {std::move(offsets), std::move(sorted_targets), std::move(sorted_weights),
          std::move(node_weights)};
}
} // namespace

ContractionResult contract(const Graph &graph, const Clustering &clustering) {
  const NodeID n = graph.n();
  const ClusterID coarse_n = clustering.cluster_count();
  const auto &mapping = clustering.assignment;

  // Bucket fine nodes by cluster.
  std::vector<NodeID> bucket_start(coarse_n + 1, 0);
  for (NodeID u = 0; u < n; ++u) {
    ++bucket_start[mapping[u] + 1];
  }
  std::partial_sum(bucket_start.begin(), bucket_start.end(), bucket_start.begin());
  std::vector<NodeID> members(n);
  {
    std::vector<NodeID> cursor(bucket_start.begin(), bucket_start.end() - 1);
    for (NodeID u = 0; u < n; ++u) {
      members[cursor[mapping[u]]++] = u;
    }
  }

  std::vector<EdgeID> offsets(coarse_n + 1, 0);
  std::vector<NodeID> targets;
  std::vector<EdgeWeight> edge_weights;
  targets.reserve(graph.directed_edge_count());
  edge_weights.reserve(graph.directed_edge_count());

  std::vector<EdgeWeight> accumulated(coarse_n, 0);
  std::vector<ClusterID> touched;

  for (ClusterID c = 0; c < coarse_n; ++c) {
    for (NodeID i = bucket_start[c]; i < bucket_start[c + 1]; ++i) {
      const NodeID u = members[i];
      for (EdgeID e = graph.first_edge(u); e < graph.first_invalid_edge(u); ++e) {
        const ClusterID target = mapping[graph.edge_target(e)];
        if (target == c) {
          continue;
        }
        if (accumulated[target] == 0) {
          touched.push_back(target);
        }
        accumulated[target] += graph.edge_weight(e);
      }
    }
    for (const ClusterID target : touched) {
      targets.push_back(target);
      edge_weights.push_back(accumulated[target]);
      accumulated[target] = 0;
    }
    touched.clear();
    offsets[c + 1] = targets.size();
  }

  ContractionResult result{
      .coarse = sort_by_transposition(std::move(offsets), targets, edge_weights,
                                      clustering.cluster_weights),
      .fine_to_coarse = mapping,
  };
  return result;
}
} // namespace lmpart
