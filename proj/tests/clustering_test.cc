#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "lmpart/clustering.h"

#include "oracles.h"

namespace {
using namespace lmpart;
using namespace lmpart::testing;

ClusteringParams params_with(const NodeWeight max_weight, const std::uint64_t seed = 1) {
  ClusteringParams params;
  params.max_cluster_weight = max_weight;
  params.max_rounds = kRunToConvergence;
  params.shrink_cap = kNoShrinkCap;
  params.seed = seed;
  return params;
}

void expect_consistent(const Graph &graph, const Clustering &clustering) {
  ASSERT_EQ(clustering.assignment.size(), graph.n());
  std::vector<NodeWeight> weights(clustering.cluster_count(), 0);
  for (NodeID u = 0; u < graph.n(); ++u) {
    ASSERT_LT(clustering.assignment[u], clustering.cluster_count());
    weights[clustering.assignment[u]] += graph.node_weight(u);
  }
  EXPECT_EQ(weights, clustering.cluster_weights);
  for (const NodeWeight w : weights) {
    EXPECT_GT(w, 0);
  }
}

std::vector<NodeID> cluster_sizes(const Clustering &clustering) {
  std::vector<NodeID> sizes(clustering.cluster_count(), 0);
  for (const ClusterID c : clustering.assignment) {
    ++sizes[c];
  }
  return sizes;
}

TEST(LpClusterTest, TriangleMergesUnderLooseLimit) {
  const Clustering clustering = lp_cluster(triangle(), params_with(3));
  EXPECT_EQ(clustering.cluster_count(), 1);
}

TEST(LpClusterTest, TriangleStaysSingletonUnderUnitLimit) {
  const Clustering clustering = lp_cluster(triangle(), params_with(1));
  EXPECT_EQ(clustering.cluster_count(), 3);
}

TEST(LpClusterTest, StarCenterFillsUpAndLeavesStaySingleton) {
  const Graph star = star_graph(6);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Clustering clustering = lp_cluster(star, params_with(3, seed));
    expect_consistent(star, clustering);
    EXPECT_EQ(clustering.cluster_weights[clustering.assignment[0]], 3);
    // The center cluster and four singleton leaves.
    EXPECT_EQ(clustering.cluster_count(), 5);
  }
}

TEST(LpClusterTest, EssentialPropertyAtConvergence) {
  // No non-isolated singleton may have an adjacent cluster it could join.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph graph = random_graph(60, 0.08, seed, seed % 3 == 0 ? 5 : 1);
    const NodeWeight limit = 2 + static_cast<NodeWeight>(seed % 5);
    const Clustering clustering = lp_cluster(graph, params_with(limit, seed));
    expect_consistent(graph, clustering);
    const auto sizes = cluster_sizes(clustering);
    for (NodeID u = 0; u < graph.n(); ++u) {
      const ClusterID own = clustering.assignment[u];
      if (graph.degree(u) == 0 || sizes[own] != 1) {
        continue;
      }
      for (const NodeID v : graph.neighbors(u)) {
        const ClusterID other = clustering.assignment[v];
        EXPECT_GT(clustering.cluster_weights[other] + graph.node_weight(u), limit)
            << "seed " << seed << " node " << u;
      }
    }
  }
}

TEST(LpClusterTest, WeightLimitHolds) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph graph = random_connected_graph(80, 0.05, seed);
    const NodeWeight limit = 1 + static_cast<NodeWeight>(seed % 7);
    const Clustering clustering = lp_cluster(graph, params_with(limit, seed));
    for (const NodeWeight w : clustering.cluster_weights) {
      EXPECT_LE(w, limit);
    }
  }
}

TEST(LpClusterTest, HeavyNodesMayExceedLimitAsSingletons) {
  const Graph graph = make_graph(3, {{0, 1}, {1, 2}}, {5, 1, 1});
  const Clustering clustering = lp_cluster(graph, params_with(2));
  const auto sizes = cluster_sizes(clustering);
  EXPECT_EQ(sizes[clustering.assignment[0]], 1);
  EXPECT_EQ(clustering.cluster_count(), 2);
}

TEST(LpClusterTest, SeedDeterminism) {
  const Graph graph = random_connected_graph(200, 0.02, 3);
  ClusteringParams params = params_with(4, 17);
  EXPECT_EQ(lp_cluster(graph, params).assignment, lp_cluster(graph, params).assignment);
}

TEST(LpClusterTest, ShrinkCapBoundsClusterCount) {
  const Graph graph = random_connected_graph(1000, 0.01, 5);
  ClusteringParams params = params_with(graph.total_node_weight() / 4);
  params.shrink_cap = 2.5;
  const Clustering clustering = lp_cluster(graph, params);
  EXPECT_GE(clustering.cluster_count(), 400);
}

TEST(MinClusterCountTest, Arithmetic) {
  EXPECT_EQ(min_cluster_count(1000, 2.5), 400);
  EXPECT_EQ(min_cluster_count(1001, 2.5), 401);
  EXPECT_EQ(min_cluster_count(10, kNoShrinkCap), 0);
}

TEST(TwoHopClusterTest, StarLeavesShareTheirFavorite) {
  const Graph star = star_graph(6);
  const ClusteringParams params = params_with(3);
  const Clustering lp = lp_cluster(star, params);
  ASSERT_EQ(lp.cluster_count(), 5);
  const Clustering merged = two_hop_cluster(star, lp, params);
  expect_consistent(star, merged);
  EXPECT_EQ(merged.cluster_count(), 3);
  for (const NodeWeight w : merged.cluster_weights) {
    EXPECT_LE(w, 3);
  }
  EXPECT_LE(merged.cluster_count(), 0.5 * 7 + 7.0 / 3.0);
}

TEST(TwoHopClusterTest, NoSingletonsIsNoOp) {
  const Graph graph = disjoint_cliques(2, 3);
  const std::vector<ClusterID> assignment = {0, 0, 0, 1, 1, 1};
  const Clustering clustering = compact_clustering(graph, assignment);
  const Clustering result = two_hop_cluster(graph, clustering, params_with(6));
  EXPECT_EQ(result.assignment, clustering.assignment);
}

TEST(TwoHopClusterTest, DifferentFavoritesStayApart) {
  // Path 0-1-2-3-4-5: clusters {1,2} and {3,4}; singletons 0 and 5 have
  // different favorites.
  const Graph graph = path_graph(6);
  const std::vector<ClusterID> assignment = {0, 1, 1, 2, 2, 3};
  const Clustering clustering = compact_clustering(graph, assignment);
  const Clustering result = two_hop_cluster(graph, clustering, params_with(2));
  EXPECT_EQ(result.cluster_count(), 4);
}

TEST(TwoHopClusterTest, RespectsWeightLimit) {
  const Graph star = star_graph(9);
  const ClusteringParams params = params_with(2);
  const Clustering result = two_hop_cluster(star, singleton_clustering(star), params);
  expect_consistent(star, result);
  for (const NodeWeight w : result.cluster_weights) {
    EXPECT_LE(w, 2);
  }
  // The 9 leaves share the center as favorite: 4 pairs and one leftover leaf.
  EXPECT_EQ(result.cluster_count(), 1 + 4 + 1);
}

TEST(ClusterIsolatedTest, PacksFirstFit) {
  const Graph graph = make_graph(4, {});
  const Clustering result = cluster_isolated(graph, singleton_clustering(graph), params_with(2));
  expect_consistent(graph, result);
  EXPECT_EQ(result.cluster_count(), 2);
  EXPECT_EQ(result.cluster_weights, (std::vector<NodeWeight>{2, 2}));
}

TEST(ClusterIsolatedTest, NoIsolatedNodesIsIdentity) {
  const Graph graph = path_graph(5);
  const Clustering singletons = singleton_clustering(graph);
  EXPECT_EQ(cluster_isolated(graph, singletons, params_with(3)).assignment,
            singletons.assignment);
}

TEST(ClusterIsolatedTest, HeavyIsolatedNodeStaysSingleton) {
  const Graph graph = make_graph(3, {}, {5, 1, 1});
  const Clustering result = cluster_isolated(graph, singleton_clustering(graph), params_with(2));
  EXPECT_EQ(result.cluster_count(), 2);
  EXPECT_EQ(cluster_sizes(result)[result.assignment[0]], 1);
}

TEST(CoarseningClusteringTest, SingleEdge) {
  const Graph graph = make_graph(2, {{0, 1}});
  EXPECT_EQ(coarsening_clustering(graph, params_with(2)).cluster_count(), 1);
}

TEST(CoarseningClusteringTest, ShrinkCapArithmetic) {
  const Graph graph = random_connected_graph(1000, 0.004, 11);
  ClusteringParams params = params_with(graph.total_node_weight() / 4);
  params.shrink_cap = 2.5;
  EXPECT_GE(coarsening_clustering(graph, params).cluster_count(), 400);
}

TEST(CoarseningClusteringTest, IdsAreDenseAndDeterministic) {
  const Graph graph = random_graph(300, 0.01, 2);
  const ClusteringParams params = params_with(5, 3);
  const Clustering a = coarsening_clustering(graph, params);
  const Clustering b = coarsening_clustering(graph, params);
  EXPECT_EQ(a.assignment, b.assignment);
  expect_consistent(graph, a);
  std::set<ClusterID> ids(a.assignment.begin(), a.assignment.end());
  EXPECT_EQ(ids.size(), a.cluster_count());
}

// Cluster count bound for converged clusterings without isolated nodes.
void expect_size_bound(const Graph &graph, const NodeWeight limit, const std::uint64_t seed) {
  const Clustering clustering = coarsening_clustering(graph, params_with(limit, seed));
  expect_consistent(graph, clustering);
  const double bound = 0.5 * graph.n() + static_cast<double>(graph.total_node_weight()) / limit;
  EXPECT_LE(clustering.cluster_count(), bound) << "n=" << graph.n() << " U=" << limit;
}

TEST(CoarseningClusteringTest, SizeBoundOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const NodeID n = 50 + static_cast<NodeID>(seed * 13);
    const Graph graph = random_connected_graph(n, 3.0 / n, seed);
    for (const NodeWeight factor : {2, 4, 8}) {
      expect_size_bound(graph, factor * graph.total_node_weight() / n, seed);
    }
  }
}

TEST(CoarseningClusteringTest, SizeBoundOnAdversarialStars) {
  // Many stars of varying size whose leaves overflow the center cluster.
  for (NodeID leaves = 1; leaves < 40; ++leaves) {
    const Graph star = star_graph(leaves);
    // U >= 2 c(V) / |V| = 2
    for (NodeWeight limit = 2; limit <= leaves + 1; ++limit) {
      expect_size_bound(star, limit, leaves);
    }
  }
}
} // namespace
