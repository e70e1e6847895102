/*******************************************************************************
 * Multilevel driver.
 *
 * @file:   multilevel.cc
 ******************************************************************************/
#include "lmpart/multilevel.h"

#include <chrono>
#include <cmath>

#include "lmpart/contraction.h"
#include "lmpart/metrics.h"
#include "lmpart/random.h"

namespace lmpart {
namespace {
constexpr std::uint64_t kClusterSalt = 0xc1;
constexpr std::uint64_t kSparsifySalt = 0x5a;
constexpr std::uint64_t kInitialSalt = 0x1a;
constexpr std::uint64_t kRefineSalt = 0x2e;

class Stopwatch {
public:
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - _start).count();
  }

private:
  std::chrono::steady_clock::time_point _start = std::chrono::steady_clock::now();
};

Hierarchy build_hierarchy_impl(const Graph &graph, const PartitionerConfig &cfg,
                               PhaseSeconds *seconds) {
  Hierarchy hierarchy;
  hierarchy.max_cluster_weight = max_cluster_weight(graph, cfg);
  hierarchy.levels.emplace_back();
  hierarchy.levels.back().graph = graph;

  const double stop_nodes = cfg.coarsening_target_factor * cfg.k;

  while (static_cast<double>(hierarchy.coarsest().n()) > stop_nodes) {
    const Graph &current = hierarchy.coarsest();
    const std::size_t level = hierarchy.size();

    Stopwatch coarsening;
    const Clustering clustering =
        coarsening_clustering(current, coarsening_params(graph, cfg, level));
    if (clustering.cluster_count() == current.n()) {
      break;
    }

    ContractionResult contraction = contract(current, clustering);
    HierarchyLevel next;
    next.graph = std::move(contraction.coarse);
    next.fine_to_coarse = std::move(contraction.fine_to_coarse);
    if (seconds != nullptr) {
      seconds->coarsening += coarsening.seconds();
    }

    Stopwatch sparsification;
    next.pre_sparsify_edges = next.graph.m();
    next.target_edges = target_edge_count(current.m(), current.n(), next.graph.n(), cfg.sparsify);
    next.sampling = {.expected_edges = static_cast<double>(next.graph.m()), .stddev = 0.0};
    if (cfg.sparsify.kind != SparsifierKind::kNone &&
        should_sparsify(next.graph.m(), next.target_edges, cfg.sparsify)) {
      SparsifyConfig sparsify_cfg = cfg.sparsify;
      sparsify_cfg.seed = mix_seed(cfg.seed, kSparsifySalt, level);
      Graph sparse = sparsify(next.graph, next.target_edges, sparsify_cfg, &next.sampling);
      if (cfg.trace) {
        next.unsparsified = std::move(next.graph);
      }
      next.graph = std::move(sparse);
      next.sparsified = true;
    }
    if (seconds != nullptr) {
      seconds->sparsification += sparsification.seconds();
    }

    const double shrink =
        static_cast<double>(current.n()) / static_cast<double>(next.graph.n());
    hierarchy.levels.push_back(std::move(next));
    if (shrink < cfg.min_shrink) {
      break;
    }
  }

  return hierarchy;
}
} // namespace

NodeWeight max_cluster_weight(const Graph &graph, const PartitionerConfig &cfg) {
  const double limit = static_cast<double>(graph.total_node_weight()) /
                       (cfg.coarsening_target_factor * static_cast<double>(cfg.k));
  return std::max<NodeWeight>(1, static_cast<NodeWeight>(std::floor(limit)));
}

ClusteringParams coarsening_params(const Graph &input, const PartitionerConfig &cfg,
                                   const std::size_t level) {
  ClusteringParams params = cfg.clustering;
  params.max_cluster_weight = max_cluster_weight(input, cfg);
  params.seed = mix_seed(cfg.seed, kClusterSalt, level);
  return params;
}

Hierarchy build_hierarchy(const Graph &graph, const PartitionerConfig &cfg) {
  return build_hierarchy_impl(graph, cfg, nullptr);
}

std::vector<LevelStats> level_stats(const Hierarchy &hierarchy) {
  std::vector<LevelStats> stats;
  for (const HierarchyLevel &level : hierarchy.levels) {
    stats.push_back({
        .n = level.graph.n(),
        .m = level.graph.m(),
        .sparsified = level.sparsified,
        .pre_sparsify_m = level.fine_to_coarse.empty() ? level.graph.m() : level.pre_sparsify_edges,
        .target_m = level.target_edges,
        .sampling_stddev = level.sampling.stddev,
    });
  }
  return stats;
}

PartitionResult partition(const Graph &graph, const PartitionerConfig &cfg) {
  if (cfg.k == 0) {
    throw std::invalid_argument("k must be positive");
  }

  RunStats stats;
  stats.config = cfg;
  QualityTrace trace;
  QualityTrace *tracer = cfg.trace ? &trace : nullptr;

  const Hierarchy hierarchy = build_hierarchy_impl(graph, cfg, &stats.seconds);
  const BalanceSpec balance = make_balance(graph, cfg.k, cfg.epsilon);
  const std::size_t coarsest = hierarchy.size() - 1;

  Stopwatch initial;
  InitialPartitionResult ip = recursive_bipartition(
      hierarchy.coarsest(), cfg.k, balance, mix_seed(cfg.seed, kInitialSalt), cfg.bipartition,
      tracer);
  stats.seconds.initial = initial.seconds();

  Stopwatch refinement;
  Partition current = lp_refine(hierarchy.coarsest(), std::move(ip.partition), balance,
                                cfg.refine_rounds, mix_seed(cfg.seed, kRefineSalt, coarsest),
                                tracer);

  for (std::size_t level = coarsest; level > 0; --level) {
    const HierarchyLevel &coarse = hierarchy.levels[level];
    const Graph &fine = hierarchy.levels[level - 1].graph;
    Partition projected = project(fine, coarse.fine_to_coarse, current);

    if (tracer != nullptr) {
      // Projection preserves the cut of the contracted graph, which differs
      // from the stored graph on sparsified levels.
      const Graph &contracted = coarse.unsparsified ? *coarse.unsparsified : coarse.graph;
      ++trace.projections;
      if (cut(fine, projected) != cut(contracted, current)) {
        ++trace.projection_mismatches;
      }
    }

    current = lp_refine(fine, std::move(projected), balance, cfg.refine_rounds,
                        mix_seed(cfg.seed, kRefineSalt, level - 1), tracer);
  }
  stats.seconds.refinement = refinement.seconds();

  const Imbalance balance_result = imbalance(current, balance);
  stats.levels = level_stats(hierarchy);
  stats.cut = cut(graph, current);
  stats.imbalance = balance_result.ratio;
  stats.max_block_weight = balance_result.max_block_weight;
  stats.feasible = balance_result.feasible;
  if (tracer != nullptr) {
    stats.trace = trace;
  }

  return {.partition = std::move(current), .stats = std::move(stats)};
}

nlohmann::ordered_json to_json(const PartitionerConfig &cfg) {
  return {
      {"k", cfg.k},
      {"epsilon", cfg.epsilon},
      {"sparsifier", std::string(to_string(cfg.sparsify.kind))},
      {"tau_e", cfg.sparsify.tau_e},
      {"tau_d", cfg.sparsify.tau_d},
      {"rho", cfg.sparsify.rho},
      {"ff_p", cfg.sparsify.ff_p},
      {"ff_nu", cfg.sparsify.ff_nu},
      {"seed", cfg.seed},
      {"clustering_rounds", cfg.clustering.max_rounds},
      {"refine_rounds", cfg.refine_rounds},
      {"shrink_cap", cfg.clustering.shrink_cap},
      {"coarsening_target_factor", cfg.coarsening_target_factor},
      {"coarsest_stop_factor", cfg.coarsest_stop_factor},
      {"min_shrink", cfg.min_shrink},
      {"bipartition_attempts", cfg.bipartition.attempts},
  };
}

nlohmann::ordered_json to_json(const RunStats &stats, const bool include_timings) {
  nlohmann::ordered_json doc;
  doc["config"] = to_json(stats.config);

  nlohmann::ordered_json levels = nlohmann::ordered_json::array();
  for (const LevelStats &level : stats.levels) {
    levels.push_back({
        {"n", level.n},
        {"m", level.m},
        {"sparsified", level.sparsified},
        {"pre_sparsify_m", level.pre_sparsify_m},
        {"target_m", level.target_m},
    });
  }
  doc["levels"] = std::move(levels);

  if (include_timings) {
    doc["phase_seconds"] = {
        {"coarsening", stats.seconds.coarsening},
        {"sparsification", stats.seconds.sparsification},
        {"initial", stats.seconds.initial},
        {"refinement", stats.seconds.refinement},
    };
  }

  doc["cut"] = stats.cut;
  doc["imbalance"] = stats.imbalance;
  doc["max_block_weight"] = stats.max_block_weight;
  doc["feasible"] = stats.feasible;
  doc["balance_violation"] = !stats.feasible;
  return doc;
}
} // namespace lmpart
