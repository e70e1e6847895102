/*******************************************************************************
 * Uniform, weighted threshold and Forest Fire based edge sampling.
 *
 * @file:   sparsification.cc
 ******************************************************************************/
#include "lmpart/sparsification.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lmpart/random.h"

namespace lmpart {
namespace {
constexpr std::uint64_t kUniformSalt = 0x55;
constexpr std::uint64_t kTieSalt = 0x7e;
constexpr std::uint64_t kPivotSalt = 0x91;
constexpr std::uint64_t kFireSalt = 0xf1;

double binomial_stddev(const double trials, const double p) {
  return std::sqrt(trials * p * (1.0 - p));
}
} // namespace

std::string_view to_string(const SparsifierKind kind) {
  switch (kind) {
  case SparsifierKind::kNone:
    return "none";
  case SparsifierKind::kUniform:
    return "uniform";
  case SparsifierKind::kThresholdWeight:
    return "t-weight";
  case SparsifierKind::kThresholdForestFire:
    return "t-ff";
  case SparsifierKind::kThresholdWeightedForestFire:
    return "t-wff";
  }
  return "unknown";
}

std::optional<SparsifierKind> parse_sparsifier(const std::string_view name) {
  for (const auto kind :
       {SparsifierKind::kNone, SparsifierKind::kUniform, SparsifierKind::kThresholdWeight,
        SparsifierKind::kThresholdForestFire, SparsifierKind::kThresholdWeightedForestFire}) {
    if (to_string(kind) == name) {
      return kind;
    }
  }
  return std::nullopt;
}

EdgeID target_edge_count(const EdgeID prev_edges, const NodeID prev_nodes,
                         const NodeID coarse_nodes, const SparsifyConfig &cfg) {
  if (prev_nodes == 0) {
    throw std::invalid_argument("target_edge_count() requires a non-empty previous level");
  }
  const double edge_bound = cfg.tau_e * static_cast<double>(prev_edges);
  const double density_bound = cfg.tau_d * static_cast<double>(prev_edges) /
                               static_cast<double>(prev_nodes) *
                               static_cast<double>(coarse_nodes);
  const double target = std::min(edge_bound, density_bound);
  if (target <= 0.0) {
    return 0;
  }
  return std::max<EdgeID>(1, static_cast<EdgeID>(std::floor(target)));
}

bool should_sparsify(const EdgeID coarse_edges, const EdgeID target, const SparsifyConfig &cfg) {
  return static_cast<double>(coarse_edges) > cfg.rho * static_cast<double>(target);
}

Graph uniform_sample(const Graph &graph, const EdgeID target, const std::uint64_t seed,
                     SamplingMoments *moments) {
  const EdgeID m = graph.m();
  const double p = m == 0 ? 1.0 : std::min(1.0, static_cast<double>(target) / m);
  const std::uint64_t edge_seed = mix_seed(seed, kUniformSalt);

  const std::vector<EdgeID> ids = undirected_edge_ids(graph);
  std::vector<bool> keep(m, false);
  for (NodeID u = 0; u < graph.n(); ++u) {
    for (EdgeID e = graph.first_edge(u); e < graph.first_invalid_edge(u); ++e) {
      const NodeID v = graph.edge_target(e);
      if (u < v) {
        keep[ids[e]] = edge_coin(edge_seed, u, v) < p;
      }
    }
  }

  if (moments != nullptr) {
    *moments = {.expected_edges = p * m, .stddev = binomial_stddev(m, p)};
  }
  return filter_edges(graph, ids, keep);
}

ThresholdSelection weight_threshold_select(const std::span<const EdgeWeight> values,
                                           const EdgeID target, const std::uint64_t seed) {
  if (target < 1 || target > values.size()) {
    throw std::out_of_range("threshold target must lie in [1, number of values]");
  }

  std::vector<EdgeWeight> work(values.begin(), values.end());
  Random rng(mix_seed(seed, kPivotSalt));

  std::size_t lo = 0;
  std::size_t hi = work.size();
  EdgeID rank = target;
  EdgeWeight threshold = 0;

  while (true) {
    const EdgeWeight pivot = work[lo + rng.next_below(hi - lo)];

    // Three-way partition of [lo, hi) into > pivot | == pivot | < pivot.
    std::size_t gt_end = lo;
    std::size_t i = lo;
    std::size_t lt_begin = hi;
    while (i < lt_begin) {
      if (work[i] > pivot) {
        std::swap(work[i++], work[gt_end++]);
      } else if (work[i] < pivot) {
        std::swap(work[i], work[--lt_begin]);
      } else {
        ++i;
      }
    }

    const std::size_t greater = gt_end - lo;
    const std::size_t equal = lt_begin - gt_end;
    if (rank <= greater) {
      hi = gt_end;
    } else if (rank <= greater + equal) {
      threshold = pivot;
      break;
    } else {
      rank -= greater + equal;
      lo = lt_begin;
    }
  }

  ThresholdSelection selection{.threshold = threshold};
  for (const EdgeWeight value : values) {
    if (value > threshold) {
      ++selection.above;
    } else if (value < threshold) {
      ++selection.below;
    } else {
      ++selection.equal;
    }
  }
  selection.keep_probability =
      static_cast<double>(target - selection.above) / static_cast<double>(selection.equal);
  return selection;
}

Graph threshold_sample(const Graph &graph, const std::span<const EdgeWeight> scores,
                       const EdgeID target, const std::uint64_t seed, SamplingMoments *moments) {
  const EdgeID m = graph.m();
  if (scores.size() != m) {
    throw std::invalid_argument("threshold_sample() needs one score per undirected edge");
  }
  if (target > m) {
    throw std::out_of_range("threshold target exceeds the number of edges");
  }
  if (target == m) {
    if (moments != nullptr) {
      *moments = {.expected_edges = static_cast<double>(m), .stddev = 0.0};
    }
    return graph;
  }
  if (target == 0) {
    if (moments != nullptr) {
      *moments = {};
    }
    return filter_edges(graph, undirected_edge_ids(graph), std::vector<bool>(m, false));
  }

  const ThresholdSelection selection = weight_threshold_select(scores, target, seed);
  const double p = selection.keep_probability;
  const std::uint64_t tie_seed = mix_seed(seed, kTieSalt);

  const std::vector<EdgeID> ids = undirected_edge_ids(graph);
  std::vector<bool> keep(m, false);
  for (NodeID u = 0; u < graph.n(); ++u) {
    for (EdgeID e = graph.first_edge(u); e < graph.first_invalid_edge(u); ++e) {
      const NodeID v = graph.edge_target(e);
      if (u > v) {
        continue;
      }
      const EdgeWeight score = scores[ids[e]];
      if (score > selection.threshold) {
        keep[ids[e]] = true;
      } else if (score == selection.threshold) {
        keep[ids[e]] = edge_coin(tie_seed, u, v) < p;
      }
    }
  }

  if (moments != nullptr) {
    *moments = {
        .expected_edges = selection.above + p * selection.equal,
        .stddev = binomial_stddev(selection.equal, p),
    };
  }
  return filter_edges(graph, ids, keep);
}

std::vector<EdgeWeight> edge_weight_scores(const Graph &graph) {
  std::vector<EdgeWeight> scores;
  scores.reserve(graph.m());
  for (const auto &edge : edge_list(graph)) {
    scores.push_back(edge.weight);
  }
  return scores;
}

ForestFireScores forest_fire_scores(const Graph &graph, const SparsifyConfig &cfg,
                                    const bool weighted) {
  const NodeID n = graph.n();
  ForestFireScores result;
  result.scores.assign(graph.m(), 0);
  if (graph.m() == 0) {
    return result;
  }

  const std::vector<EdgeID> ids = undirected_edge_ids(graph);
  const double budget = cfg.ff_nu * static_cast<double>(graph.m());
  Random rng(mix_seed(cfg.seed, kFireSalt, weighted));

  // visited[v] == fire id marks v as burnt in the current fire.
  std::vector<std::uint64_t> visited(n, 0);
  std::vector<NodeID> queue;
  std::vector<EdgeID> candidates;

  while (static_cast<double>(result.burnt) <= budget) {
    const std::uint64_t fire = ++result.fires;
    queue.clear();
    queue.push_back(static_cast<NodeID>(rng.next_below(n)));

    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeID u = queue[head];

      candidates.clear();
      EdgeWeight candidate_weight = 0;
      for (EdgeID e = graph.first_edge(u); e < graph.first_invalid_edge(u); ++e) {
        if (visited[graph.edge_target(e)] != fire) {
          candidates.push_back(e);
          candidate_weight += graph.edge_weight(e);
        }
      }

      while (!candidates.empty()) {
        std::size_t pick = 0;
        if (weighted) {
          const double r = rng.next_unit() * static_cast<double>(candidate_weight);
          double prefix = 0.0;
          pick = candidates.size() - 1;
          for (std::size_t i = 0; i < candidates.size(); ++i) {
            prefix += static_cast<double>(graph.edge_weight(candidates[i]));
            if (r < prefix) {
              pick = i;
              break;
            }
          }
        } else {
          pick = rng.next_below(candidates.size());
        }

        const EdgeID e = candidates[pick];
        const NodeID v = graph.edge_target(e);
        visited[v] = fire;
        queue.push_back(v);
        ++result.scores[ids[e]];
        ++result.burnt;

        candidate_weight -= graph.edge_weight(e);
        candidates[pick] = candidates.back();
        candidates.pop_back();

        if (rng.next_bool(cfg.ff_p)) {
          break;
        }
      }
    }
  }

  return result;
}

Graph sparsify(const Graph &graph, const EdgeID target, const SparsifyConfig &cfg,
               SamplingMoments *moments) {
  const EdgeID clamped = std::min(target, graph.m());
  switch (cfg.kind) {
  case SparsifierKind::kNone:
    if (moments != nullptr) {
      *moments = {.expected_edges = static_cast<double>(graph.m()), .stddev = 0.0};
    }
    return graph;
  case SparsifierKind::kUniform:
    return uniform_sample(graph, clamped, cfg.seed, moments);
  case SparsifierKind::kThresholdWeight:
    return threshold_sample(graph, edge_weight_scores(graph), clamped, cfg.seed, moments);
  case SparsifierKind::kThresholdForestFire:
    return threshold_sample(graph, forest_fire_scores(graph, cfg, false).scores, clamped,
                            cfg.seed, moments);
  case SparsifierKind::kThresholdWeightedForestFire:
    return threshold_sample(graph, forest_fire_scores(graph, cfg, true).scores, clamped, cfg.seed,
                            moments);
  }
  throw std::invalid_argument("unknown sparsifier");
}
} // namespace lmpart
