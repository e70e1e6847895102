/*******************************************************************************
 * Modularity bookkeeping for a clustering and the edge reduction caused by
 * contracting it.
 *
 * For cluster i, e_ii is the fraction of edges inside the cluster and a_i the
 * fraction of edge endpoints in it. Q_C = sum_i (e_ii - a_i^2) and
 * alpha_C = max_i a_i satisfy Q_C <= sum_i e_ii <= Q_C + alpha_C. Contraction
 * keeps at least a 1 - Q_C - alpha_C - p_C fraction of the edges, where p_C
 * counts parallel inter-cluster edges that get merged.
 *
 * @file:   modularity.h
 ******************************************************************************/
#pragma once

#include <iosfwd>

#include <json.hpp>

#include "lmpart/clustering.h"
#include "lmpart/graph.h"
#include "lmpart/multilevel.h"

namespace lmpart {
__extension__ typedef __int128 Int128;

enum class ModularityMode {
  // Every edge counts once.
  kUnweighted,
  // Edges count with their weight.
  kWeighted,
};

// All quantities scaled by the common denominator 4 W^2, W being the number
// (or total weight) of edges.
struct ExactModularity {
  Int128 denominator = 1;
  Int128 q = 0;
  Int128 intra = 0;
  Int128 alpha = 0;

  // Q_C <= sum_i e_ii <= Q_C + alpha_C, evaluated without rounding.
  [[nodiscard]] bool sandwich_holds() const {
    return q <= intra && intra <= q + alpha;
  }
};

struct ModularityReport {
  ModularityMode mode = ModularityMode::kUnweighted;
  ClusterID cluster_count = 0;
  double q_c = 0.0;
  double alpha_c = 0.0;
  double intra_fraction = 0.0;
  double inter_fraction = 0.0;
  // Inter-cluster edges merged into parallel coarse edges, relative to |E|.
  double parallel_fraction = 0.0;
  // |E(G')| / |E(G)|
  double coarse_edge_fraction = 0.0;
  // w(E(G')) / w(E(G))
  double coarse_weight_fraction = 0.0;
  // 1 - Q_C - alpha_C - p_C
  double lemma_lower_bound = 0.0;
  ExactModularity exact;
};

// Throws std::invalid_argument on edgeless graphs.
[[nodiscard]] ModularityReport modularity_report(const Graph &graph, const Clustering &clustering,
                                                 ModularityMode mode = ModularityMode::kUnweighted);

struct EdgeReductionRecord {
  ClusterID cluster_count = 0;
  double remaining_weight_fraction = 0.0;
  double remaining_edge_fraction = 0.0;
  double q_c = 0.0;
  double bound_1_minus_qc = 0.0;
  double alpha_c = 0.0;
};

[[nodiscard]] EdgeReductionRecord edge_reduction_study(const Graph &graph,
                                                       const Clustering &clustering);

// One coarsening step with the clustering the partitioner would use on the
// input level.
[[nodiscard]] EdgeReductionRecord edge_reduction_study(const Graph &graph,
                                                       const PartitionerConfig &cfg);

[[nodiscard]] nlohmann::ordered_json to_json(const ModularityReport &report);
[[nodiscard]] nlohmann::ordered_json to_json(const EdgeReductionRecord &record);
void write_csv(const ModularityReport &report, std::ostream &out);
void write_csv(const EdgeReductionRecord &record, std::ostream &out);
} // namespace lmpart
