#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "lmpart/generators.h"
#include "lmpart/graph.h"
#include "lmpart/metis_io.h"

#include "oracles.h"

namespace {
using namespace lmpart;
using namespace lmpart::testing;

TEST(BuildGraphTest, PathFromEdgeList) {
  const Graph graph = make_graph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(graph.n(), 3);
  EXPECT_EQ(graph.m(), 2);
  EXPECT_EQ(graph.degree(1), 2);
  EXPECT_EQ(graph.total_node_weight(), 3);
  EXPECT_FALSE(find_violation(graph).has_value());
}

TEST(BuildGraphTest, DuplicatesAreMergedBySummation) {
  const Graph graph = make_graph(2, {{0, 1, 2}, {0, 1, 3}});
  ASSERT_EQ(graph.m(), 1);
  EXPECT_EQ(graph.edge_weight(graph.first_edge(0)), 5);
  EXPECT_EQ(graph.edge_weight(graph.first_edge(1)), 5);
}

TEST(BuildGraphTest, ReversedDuplicatesAreMerged) {
  const Graph graph = make_graph(2, {{0, 1, 2}, {1, 0, 4}});
  ASSERT_EQ(graph.m(), 1);
  EXPECT_EQ(graph.total_edge_weight(), 6);
}

TEST(BuildGraphTest, RejectsSelfLoop) {
  const std::vector<WeightedEdge> edges = {{0, 0, 1}};
  EXPECT_THROW((void)build_graph(1, edges), GraphError);
}

TEST(BuildGraphTest, DropsSelfLoopOnRequest) {
  const std::vector<WeightedEdge> edges = {{0, 0, 1}, {0, 1, 1}};
  const Graph graph = build_graph(2, edges, {}, SelfLoopPolicy::kDrop);
  EXPECT_EQ(graph.m(), 1);
}

TEST(BuildGraphTest, RejectsOutOfRangeAndBadWeights) {
  const std::vector<WeightedEdge> out_of_range = {{0, 2, 1}};
  EXPECT_THROW((void)build_graph(2, out_of_range), GraphError);
  const std::vector<WeightedEdge> zero_weight = {{0, 1, 0}};
  EXPECT_THROW((void)build_graph(2, zero_weight), GraphError);
  const std::vector<WeightedEdge> fine = {{0, 1, 1}};
  const std::vector<NodeWeight> bad_nodes = {1, 0};
  EXPECT_THROW((void)build_graph(2, fine, bad_nodes), GraphError);
}

TEST(BuildGraphTest, AdjacencyIsSortedAndSymmetric) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph graph = random_graph(40, 0.2, seed, 9);
    ASSERT_FALSE(find_violation(graph).has_value()) << *find_violation(graph);
    for (NodeID u = 0; u < graph.n(); ++u) {
      const auto neighbors = graph.neighbors(u);
      EXPECT_TRUE(std::is_sorted(neighbors.begin(), neighbors.end()));
    }
  }
}

TEST(ValidateTest, DetectsAsymmetry) {
  Graph broken({0, 1, 1}, {1}, {1}, {1, 1});
  EXPECT_TRUE(find_violation(broken).has_value());
  EXPECT_THROW(validate(broken), GraphError);
}

TEST(ValidateTest, DetectsWeightMismatch) {
  Graph broken({0, 1, 2}, {1, 0}, {1, 2}, {1, 1});
  EXPECT_THROW(validate(broken), GraphError);
}

TEST(UndirectedEdgeIdsTest, BothDirectionsShareCanonicalId) {
  const Graph graph = random_graph(30, 0.3, 7);
  const auto ids = undirected_edge_ids(graph);
  const auto edges = edge_list(graph);
  ASSERT_EQ(edges.size(), graph.m());
  for (NodeID u = 0; u < graph.n(); ++u) {
    for (EdgeID e = graph.first_edge(u); e < graph.first_invalid_edge(u); ++e) {
      const NodeID v = graph.edge_target(e);
      const WeightedEdge &canonical = edges[ids[e]];
      EXPECT_EQ(canonical.u, std::min(u, v));
      EXPECT_EQ(canonical.v, std::max(u, v));
    }
  }
}

TEST(FilterEdgesTest, KeepsMarkedEdgesOnly) {
  const Graph graph = make_graph(4, {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}}, {2, 1, 1, 7});
  const auto ids = undirected_edge_ids(graph);
  const Graph filtered = filter_edges(graph, ids, {true, false, true});
  EXPECT_EQ(filtered.m(), 2);
  EXPECT_EQ(filtered.total_edge_weight(), 8);
  EXPECT_EQ(filtered.total_node_weight(), 11);
  EXPECT_FALSE(find_violation(filtered).has_value());
}

TEST(MetisTest, ParsesPath) {
  const Graph graph = parse_metis("3 2\n2\n1 3\n2\n");
  EXPECT_EQ(graph, path_graph(3));
}

TEST(MetisTest, ParsesEdgeWeights) {
  const Graph graph = parse_metis("2 1 1\n2 7\n1 7\n");
  ASSERT_EQ(graph.m(), 1);
  EXPECT_EQ(graph.total_edge_weight(), 7);
}

TEST(MetisTest, ParsesNodeWeightsAndComments) {
  const Graph graph = parse_metis("% comment\n3 2 11\n4 2 5\n% inner\n1 1 5 3 2\n2 2 2\n");
  EXPECT_EQ(graph.node_weight(0), 4);
  EXPECT_EQ(graph.node_weight(1), 1);
  EXPECT_EQ(graph.node_weight(2), 2);
  EXPECT_EQ(graph.total_edge_weight(), 7);
}

TEST(MetisTest, RejectsMalformedInput) {
  EXPECT_THROW((void)parse_metis("2 1\n2\n"), IOError);          // missing node line
  EXPECT_THROW((void)parse_metis(""), IOError);                  // missing header
  EXPECT_THROW((void)parse_metis("2 1\n2\n3\n"), IOError);       // id out of range
  EXPECT_THROW((void)parse_metis("2 1\n2\n\n"), IOError);        // asymmetric
  EXPECT_THROW((void)parse_metis("2 2\n2\n1\n"), IOError);       // wrong edge count
  EXPECT_THROW((void)parse_metis("2 1 1\n2\n1 1\n"), IOError);   // missing weight
  EXPECT_THROW((void)parse_metis("2 1 1\n2 3\n1 4\n"), IOError); // weight mismatch
  EXPECT_THROW((void)parse_metis("2 1\n2\n1\n1\n"), IOError);    // trailing content
  EXPECT_THROW((void)parse_metis("1 0\n1\n"), IOError);          // self-loop
  EXPECT_THROW((void)parse_metis("2 x\n2\n1\n"), IOError);
}

TEST(MetisTest, WritesPath) {
  EXPECT_EQ(format_metis(path_graph(3)), "3 2\n2\n1 3\n2\n");
}

TEST(MetisTest, WritesIsolatedNodes) {
  EXPECT_EQ(format_metis(make_graph(4, {})), "4 0\n\n\n\n\n");
}

TEST(MetisTest, RoundTripIsIdentity) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph graph = random_graph(25, 0.25, seed, seed % 2 == 0 ? 1 : 50);
    EXPECT_EQ(parse_metis(format_metis(graph)), graph);
  }
  const Graph weighted_nodes = make_graph(3, {{0, 1, 2}, {1, 2, 1}}, {5, 1, 9});
  const std::string text = format_metis(weighted_nodes);
  EXPECT_EQ(text.substr(0, text.find('\n')), "3 2 11");
  EXPECT_EQ(parse_metis(text), weighted_nodes);
}

GeneratorSpec er_spec(const NodeID n, const double p, const std::uint64_t seed) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::kErdosRenyi;
  spec.node_count = n;
  spec.edge_probability = p;
  spec.seed = seed;
  return spec;
}

TEST(GeneratorTest, ErExtremeProbabilities) {
  EXPECT_EQ(generate(er_spec(100, 0.0, 1)).m(), 0);
  EXPECT_EQ(generate(er_spec(100, 1.0, 1)).m(), 4950);
}

TEST(GeneratorTest, ErEdgeCountMatchesBinomialMoments) {
  // 49'995'000 pairs at p = 0.0001: mean 4999.5, per-sample sigma 70.7.
  constexpr double kPairs = 10000.0 * 9999.0 / 2.0;
  constexpr double kP = 0.0001;
  const double mean = kPairs * kP;
  const double sigma = std::sqrt(kPairs * kP * (1.0 - kP));
  constexpr int kSeeds = 50;
  double sum = 0.0;
  for (int seed = 0; seed < kSeeds; ++seed) {
    const Graph graph = generate(er_spec(10000, kP, seed));
    EXPECT_LE(std::abs(static_cast<double>(graph.m()) - mean), 5.0 * sigma);
    sum += static_cast<double>(graph.m());
  }
  EXPECT_LE(std::abs(sum / kSeeds - mean), 3.0 * sigma / std::sqrt(kSeeds));
}

TEST(GeneratorTest, ErExpectedEdgesOverridesProbability) {
  GeneratorSpec spec = er_spec(1000, 0.0, 5);
  spec.expected_edges = 4000.0;
  EXPECT_DOUBLE_EQ(expected_edge_count(spec), 4000.0);
  const double m = static_cast<double>(generate(spec).m());
  EXPECT_LE(std::abs(m - 4000.0), 5.0 * std::sqrt(4000.0));
}

TEST(GeneratorTest, SeedDeterminism) {
  EXPECT_EQ(generate(er_spec(500, 0.02, 9)), generate(er_spec(500, 0.02, 9)));
  EXPECT_NE(generate(er_spec(500, 0.02, 9)), generate(er_spec(500, 0.02, 10)));
}

TEST(GeneratorTest, ErPairsAreUniform) {
  // Every pair of a 6-node graph should appear about equally often.
  std::map<std::pair<NodeID, NodeID>, int> counts;
  constexpr int kRuns = 4000;
  for (int seed = 0; seed < kRuns; ++seed) {
    for (const WeightedEdge &e : edge_list(generate(er_spec(6, 0.3, seed)))) {
      ++counts[{e.u, e.v}];
    }
  }
  ASSERT_EQ(counts.size(), 15);
  const double sigma = std::sqrt(kRuns * 0.3 * 0.7);
  for (const auto &[pair, count] : counts) {
    EXPECT_LE(std::abs(count - kRuns * 0.3), 4.0 * sigma);
  }
}

TEST(GeneratorTest, PlantedPartitionStructure) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::kPlantedPartition;
  spec.node_count = 400;
  spec.block_count = 4;
  spec.intra_probability = 0.1;
  spec.inter_probability = 0.0;
  spec.seed = 3;
  const Graph graph = generate(spec);
  const auto truth = planted_assignment(spec);
  EXPECT_EQ(truth[5], 1);
  EXPECT_EQ(oracle_cut(graph, truth), 0);

  // 4 blocks of 100: 4 * 4950 intra pairs.
  EXPECT_DOUBLE_EQ(expected_edge_count(spec), 4 * 4950 * 0.1);
  spec.inter_probability = 0.01;
  EXPECT_DOUBLE_EQ(expected_edge_count(spec), 4 * 4950 * 0.1 + 6 * 100 * 100 * 0.01);
  const Graph mixed = generate(spec);
  const double inter = static_cast<double>(oracle_cut(mixed, planted_assignment(spec)));
  EXPECT_LE(std::abs(inter - 600.0), 5.0 * std::sqrt(600.0));
}

TEST(GeneratorTest, RejectsInvalidSpecs) {
  EXPECT_THROW((void)generate(er_spec(10, 1.5, 1)), std::invalid_argument);
  GeneratorSpec huge = er_spec(100000, 0.5, 1);
  EXPECT_THROW((void)generate(huge), std::invalid_argument);
  GeneratorSpec planted;
  planted.kind = GeneratorKind::kPlantedPartition;
  planted.node_count = 10;
  planted.block_count = 1;
  EXPECT_THROW((void)generate(planted), std::invalid_argument);
}
} // namespace
