#include <gtest/gtest.h>

#include <random>

#include "lmpart/clustering.h"
#include "lmpart/contraction.h"
#include "lmpart/metrics.h"

#include "oracles.h"

namespace {
using namespace lmpart;
using namespace lmpart::testing;

ContractionResult contract_with(const Graph &graph, const std::vector<ClusterID> &assignment) {
  return contract(graph, compact_clustering(graph, assignment));
}

TEST(ContractTest, PathPair) {
  const auto [coarse, mapping] = contract_with(path_graph(3), {0, 0, 1});
  EXPECT_EQ(coarse.n(), 2);
  EXPECT_EQ(coarse.m(), 1);
  EXPECT_EQ(coarse.node_weight(0), 2);
  EXPECT_EQ(coarse.node_weight(1), 1);
  EXPECT_EQ(coarse.total_edge_weight(), 1);
  EXPECT_EQ(mapping, (std::vector<NodeID>{0, 0, 1}));
}

TEST(ContractTest, ParallelEdgesMerge) {
  const auto [coarse, mapping] = contract_with(triangle(), {0, 1, 1});
  ASSERT_EQ(coarse.m(), 1);
  EXPECT_EQ(coarse.edge_weight(0), 2);
}

TEST(ContractTest, FourCycleOppositeCorners) {
  const auto [coarse, mapping] = contract_with(cycle_graph(4), {0, 1, 0, 1});
  EXPECT_EQ(coarse.n(), 2);
  ASSERT_EQ(coarse.m(), 1);
  EXPECT_EQ(coarse.edge_weight(0), 4);
}

TEST(ContractTest, SingletonClusteringIsIsomorphism) {
  const Graph graph = random_graph(50, 0.1, 4, 7);
  const auto [coarse, mapping] = contract(graph, singleton_clustering(graph));
  EXPECT_EQ(coarse, graph);
}

TEST(ContractTest, ConservesWeightsAndPreservesCuts) {
  std::mt19937_64 rng(99);
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    const Graph graph = random_graph(40, 0.15, trial, 1 + trial % 4);
    const ClusterID clusters = 1 + static_cast<ClusterID>(rng() % 20);
    std::vector<ClusterID> assignment(graph.n());
    for (auto &c : assignment) {
      c = static_cast<ClusterID>(rng() % clusters);
    }
    const auto [coarse, mapping] = contract_with(graph, assignment);
    ASSERT_FALSE(find_violation(coarse).has_value()) << *find_violation(coarse);
    EXPECT_EQ(coarse.total_node_weight(), graph.total_node_weight());

    EdgeWeight intra = 0;
    for (const WeightedEdge &e : edge_list(graph)) {
      intra += assignment[e.u] == assignment[e.v] ? e.weight : 0;
    }
    EXPECT_EQ(coarse.total_edge_weight() + intra, graph.total_edge_weight());

    // Every coarse partition has the same cut after projection.
    for (int p = 0; p < 5; ++p) {
      std::vector<BlockID> coarse_blocks(coarse.n());
      for (auto &b : coarse_blocks) {
        b = static_cast<BlockID>(rng() % 3);
      }
      std::vector<BlockID> fine_blocks(graph.n());
      for (NodeID u = 0; u < graph.n(); ++u) {
        fine_blocks[u] = coarse_blocks[mapping[u]];
      }
      EXPECT_EQ(oracle_cut(coarse, coarse_blocks), oracle_cut(graph, fine_blocks));
    }
  }
}

TEST(ContractTest, CoarseEdgeWeightsMatchClusterPairSums) {
  const Graph graph = random_graph(30, 0.3, 8, 9);
  std::vector<ClusterID> assignment(graph.n());
  for (NodeID u = 0; u < graph.n(); ++u) {
    assignment[u] = u % 6;
  }
  const auto [coarse, mapping] = contract_with(graph, assignment);
  std::map<std::pair<NodeID, NodeID>, EdgeWeight> expected;
  for (const WeightedEdge &e : edge_list(graph)) {
    const NodeID a = mapping[e.u];
    const NodeID b = mapping[e.v];
    if (a != b) {
      expected[{std::min(a, b), std::max(a, b)}] += e.weight;
    }
  }
  std::map<std::pair<NodeID, NodeID>, EdgeWeight> actual;
  for (const WeightedEdge &e : edge_list(coarse)) {
    actual[{e.u, e.v}] = e.weight;
  }
  EXPECT_EQ(actual, expected);
}
} // namespace
