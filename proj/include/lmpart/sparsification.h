/*******************************************************************************
 * Edge sparsification of coarse graphs.
 *
 * After contracting level i into G'_{i+1}, the coarse graph is sampled down to
 * a target of
 *
 *   m_hat = min(tau_e * |E_i|, tau_d * |E_i| / |V_i| * |V_{i+1}|)
 *
 * edges, but only if that removes at least a factor of rho of its edges.
 * Samplers keep a subset of edges with their original weights and never touch
 * the node set.
 *
 * @file:   sparsification.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lmpart/graph.h"

namespace lmpart {
enum class SparsifierKind {
  kNone,
  kUniform,
  kThresholdWeight,
  kThresholdForestFire,
  kThresholdWeightedForestFire,
};

// CLI names: none, uniform, t-weight, t-ff, t-wff.
[[nodiscard]] std::string_view to_string(SparsifierKind kind);
[[nodiscard]] std::optional<SparsifierKind> parse_sparsifier(std::string_view name);

struct SparsifyConfig {
  SparsifierKind kind = SparsifierKind::kThresholdWeight;
  double tau_e = 0.5;
  double tau_d = 0.5;
  double rho = 4.0;
  // Forest Fire: probability to stop spreading from a node after each burnt
  // edge, and the burn budget relative to |E|.
  double ff_p = 0.6;
  double ff_nu = 0.5;
  std::uint64_t seed = 1;
};

// Mean and standard deviation of the number of edges a sampler keeps.
struct SamplingMoments {
  double expected_edges = 0.0;
  double stddev = 0.0;
};

[[nodiscard]] EdgeID target_edge_count(EdgeID prev_edges, NodeID prev_nodes, NodeID coarse_nodes,
                                       const SparsifyConfig &cfg);

[[nodiscard]] bool should_sparsify(EdgeID coarse_edges, EdgeID target, const SparsifyConfig &cfg);

// Keeps each edge independently with probability target / m. The decision for
// edge {u, v} only depends on (seed, u, v).
[[nodiscard]] Graph uniform_sample(const Graph &graph, EdgeID target, std::uint64_t seed,
                                   SamplingMoments *moments = nullptr);

struct ThresholdSelection {
  EdgeWeight threshold = 0;
  EdgeID below = 0;
  EdgeID equal = 0;
  EdgeID above = 0;
  double keep_probability = 1.0;
};

// Finds the target-th largest value by quickselect with seeded pivots.
// Guarantees above < target <= above + equal. Throws std::out_of_range unless
// 1 <= target <= values.size().
[[nodiscard]] ThresholdSelection weight_threshold_select(std::span<const EdgeWeight> values,
                                                         EdgeID target, std::uint64_t seed = 1);

// Scores are indexed by undirected edge id (see undirected_edge_ids()). Keeps
// every edge scoring above the threshold, none below it, and each tied edge
// with the probability needed to hit the target in expectation.
[[nodiscard]] Graph threshold_sample(const Graph &graph, std::span<const EdgeWeight> scores,
                                     EdgeID target, std::uint64_t seed,
                                     SamplingMoments *moments = nullptr);

// Edge weights indexed by undirected edge id.
[[nodiscard]] std::vector<EdgeWeight> edge_weight_scores(const Graph &graph);

struct ForestFireScores {
  std::vector<EdgeWeight> scores;
  EdgeWeight burnt = 0;
  std::uint64_t fires = 0;
};

// Burn counts per undirected edge. With `weighted`, the next neighbor is drawn
// proportionally to the connecting edge weight instead of uniformly.
[[nodiscard]] ForestFireScores forest_fire_scores(const Graph &graph, const SparsifyConfig &cfg,
                                                  bool weighted);

[[nodiscard]] Graph sparsify(const Graph &graph, EdgeID target, const SparsifyConfig &cfg,
                             SamplingMoments *moments = nullptr);
} // namespace lmpart
