/*******************************************************************************
 * Greedy graph growing bipartitioning and recursive bipartitioning.
 *
 * @file:   initial_partitioning.cc
 ******************************************************************************/
#include "lmpart/initial_partitioning.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <tuple>

#include "lmpart/metrics.h"
#include "lmpart/random.h"

namespace lmpart {
namespace {
// Never below ceil(target), so that integral node weights always admit a
// feasible split.
NodeWeight relaxed_limit(const double target, const double eps) {
  const auto relaxed = static_cast<NodeWeight>(std::floor((1.0 + eps) * target * (1.0 + 1e-12)));
  return std::max(relaxed, static_cast<NodeWeight>(std::ceil(target * (1.0 - 1e-12))));
}

// Grows block 0 from a random start node, always absorbing the frontier node
// with the largest (internal - external) connection that still fits.
std::vector<BlockID> grow(const Graph &graph, const double target0, const NodeWeight limit0,
                          Random &rng) {
  const NodeID n = graph.n();
  std::vector<BlockID> side(n, 1);
  std::vector<EdgeWeight> to_block0(n, 0);

  std::vector<EdgeWeight> degree(n);
  for (NodeID u = 0; u < n; ++u) {
    degree[u] = graph.weighted_degree(u);
  }
  std::priority_queue<std::pair<EdgeWeight, NodeID>> frontier;
  const auto gain = [&](const NodeID u) {
    return 2 * to_block0[u] - degree[u];
  };

  const std::vector<NodeID> starts = rng.permutation(n);
  std::size_t next_start = 0;
  NodeWeight weight0 = 0;

  while (static_cast<double>(weight0) < target0) {
    if (frontier.empty()) {
      while (next_start < n && (side[starts[next_start]] == 0 ||
                                weight0 + graph.node_weight(starts[next_start]) > limit0)) {
        ++next_start;
      }
      if (next_start == n) {
        break;
      }
      const NodeID start = starts[next_start++];
      frontier.emplace(gain(start), start);
    }

    const auto [key, u] = frontier.top();
    frontier.pop();
    if (side[u] == 0 || key != gain(u) || weight0 + graph.node_weight(u) > limit0) {
      continue;
    }

    side[u] = 0;
    weight0 += graph.node_weight(u);
    const auto neighbors = graph.neighbors(u);
    const auto weights = graph.neighbor_weights(u);
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
      const NodeID v = neighbors[i];
      if (side[v] == 1) {
        to_block0[v] += weights[i];
        frontier.emplace(gain(v), v);
      }
    }
  }
  return side;
}

struct Score {
  bool feasible;
  EdgeWeight cut;
  double imbalance;

  [[nodiscard]] bool better_than(const Score &other) const {
    return std::tie(other.feasible, cut, imbalance) < std::tie(feasible, other.cut, other.imbalance);
  }
};

void recurse(const Graph &graph, const BlockID k, const BlockID first_block,
             const BalanceSpec &balance, const std::uint64_t seed,
             const BipartitionParams &params, QualityTrace *trace,
             const std::span<const NodeID> to_root, std::vector<BlockID> &root_assignment) {
  if (k == 1 || graph.n() == 0) {
    for (const NodeID u : to_root) {
      root_assignment[u] = first_block;
    }
    return;
  }

  const BlockID k_left = (k + 1) / 2;
  const BlockID k_right = k / 2;
  const double total = static_cast<double>(graph.total_node_weight());
  const double left_target = total * k_left / k;
  const double eps = adaptive_epsilon(balance, graph.total_node_weight(), k);

  const InitialPartitionResult split =
      bipartition(graph, {left_target, total - left_target}, eps, seed, params, trace);

  for (BlockID side = 0; side < 2; ++side) {
    BlockSubgraph sub = extract_block(graph, split.partition.assignment, side);
    std::vector<NodeID> sub_to_root(sub.to_parent.size());
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
      sub_to_root[i] = to_root[sub.to_parent[i]];
    }
    recurse(sub.graph, side == 0 ? k_left : k_right, side == 0 ? first_block : first_block + k_left,
            balance, mix_seed(seed, side + 1), params, trace, sub_to_root, root_assignment);
  }
}
} // namespace

InitialPartitionResult bipartition(const Graph &graph,
                                   const std::pair<double, double> weight_targets,
                                   const double eps_local, const std::uint64_t seed,
                                   const BipartitionParams &params, QualityTrace *trace) {
  const auto [target0, target1] = weight_targets;
  const std::vector<NodeWeight> limits{relaxed_limit(target0, eps_local),
                                       relaxed_limit(target1, eps_local)};

  InitialPartitionResult best;
  Score best_score{};
  bool have_best = false;

  for (std::uint32_t attempt = 0; attempt < std::max(1u, params.attempts); ++attempt) {
    const std::uint64_t attempt_seed = mix_seed(seed, attempt);
    Random rng(attempt_seed);
    Partition candidate = make_partition(graph, 2, grow(graph, target0, limits[0], rng));
    candidate = lp_refine(graph, std::move(candidate), limits, params.refine_rounds,
                          attempt_seed, trace);

    const bool nonempty = graph.n() < 2 ||
                          (candidate.block_weights[0] > 0 && candidate.block_weights[1] > 0);
    const Score score{
        .feasible = nonempty && candidate.block_weights[0] <= limits[0] &&
                    candidate.block_weights[1] <= limits[1],
        .cut = cut(graph, candidate),
        .imbalance = std::max(candidate.block_weights[0] / std::max(target0, 1.0),
                              candidate.block_weights[1] / std::max(target1, 1.0)),
    };
    if (!have_best || score.better_than(best_score)) {
      best = {.partition = std::move(candidate), .feasible = score.feasible};
      best_score = score;
      have_best = true;
    }
  }
  return best;
}

double adaptive_epsilon(const BalanceSpec &balance, const NodeWeight subgraph_weight,
                        const BlockID sub_k) {
  if (sub_k <= 1 || subgraph_weight <= 0) {
    return balance.epsilon;
  }
  const double depth = std::ceil(std::log2(static_cast<double>(sub_k)));
  const double slack = balance.max_block_weight() * sub_k / static_cast<double>(subgraph_weight);
  return std::max(0.0, std::pow(slack, 1.0 / depth) - 1.0);
}

InitialPartitionResult recursive_bipartition(const Graph &graph, const BlockID k,
                                             const BalanceSpec &balance, const std::uint64_t seed,
                                             const BipartitionParams &params,
                                             QualityTrace *trace) {
  if (k == 0) {
    throw std::invalid_argument("k must be positive");
  }
  std::vector<BlockID> assignment(graph.n(), 0);
  std::vector<NodeID> identity(graph.n());
  std::iota(identity.begin(), identity.end(), NodeID{0});
  recurse(graph, k, 0, balance, seed, params, trace, identity, assignment);

  InitialPartitionResult result{.partition = make_partition(graph, k, std::move(assignment))};
  result.feasible = result.partition.max_block_weight() <= balance.max_block_weight_floor();
  return result;
}
} // namespace lmpart
