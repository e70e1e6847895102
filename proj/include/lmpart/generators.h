/*******************************************************************************
 * Seeded random graph generators.
 *
 * Both generators skip over absent node pairs with geometrically distributed
 * jumps, so the running time is linear in the number of generated edges plus
 * the number of nodes.
 *
 * @file:   generators.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lmpart/graph.h"

namespace lmpart {
enum class GeneratorKind {
  kErdosRenyi,
  kPlantedPartition,
};

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kErdosRenyi;
  NodeID node_count = 0;

  // Erdos-Renyi: pair probability, or an expected edge count that is turned
  // into a probability.
  double edge_probability = 0.0;
  std::optional<double> expected_edges;

  // Planted partition: node v belongs to block v mod block_count.
  BlockID block_count = 2;
  double intra_probability = 0.0;
  double inter_probability = 0.0;

  std::uint64_t seed = 1;

  // Generation fails if the expected number of edges exceeds this budget.
  double max_expected_edges = 2.0e8;
};

// Throws std::invalid_argument on invalid specs or exceeded budgets.
[[nodiscard]] Graph generate(const GeneratorSpec &spec);

[[nodiscard]] double expected_edge_count(const GeneratorSpec &spec);

// Ground-truth block per node for planted partition specs.
[[nodiscard]] std::vector<BlockID> planted_assignment(const GeneratorSpec &spec);
} // namespace lmpart
