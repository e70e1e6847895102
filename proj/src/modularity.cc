/*******************************************************************************
 * Modularity report and edge reduction study.
 *
 * @file:   modularity.cc
 ******************************************************************************/
#include "lmpart/modularity.h"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "lmpart/contraction.h"

namespace lmpart {
namespace {
double to_double(const Int128 num, const Int128 den) {
  return static_cast<long double>(num) / static_cast<long double>(den);
}
} // namespace

ModularityReport modularity_report(const Graph &graph, const Clustering &clustering,
                                   const ModularityMode mode) {
  if (graph.m() == 0) {
    throw std::invalid_argument("modularity is undefined on edgeless graphs");
  }
  if (clustering.assignment.size() != graph.n()) {
    throw std::invalid_argument("clustering size does not match the number of nodes");
  }

  const bool weighted = mode == ModularityMode::kWeighted;
  const ClusterID k = clustering.cluster_count();
  const auto &cluster = clustering.assignment;

  // Per cluster: endpoint mass (weighted degree sum); globally: intra mass.
  std::vector<Int128> degree(k, 0);
  Int128 intra = 0;
  Int128 total = 0;
  EdgeID inter_edges = 0;
  for (NodeID u = 0; u < graph.n(); ++u) {
    for (EdgeID e = graph.first_edge(u); e < graph.first_invalid_edge(u); ++e) {
      const NodeID v = graph.edge_target(e);
      const Int128 mass = weighted ? graph.edge_weight(e) : 1;
      degree[cluster[u]] += mass;
      if (u < v) {
        total += mass;
        if (cluster[u] == cluster[v]) {
          intra += mass;
        } else {
          ++inter_edges;
        }
      }
    }
  }

  Int128 sum_squares = 0;
  Int128 max_degree = 0;
  for (const Int128 d : degree) {
    sum_squares += d * d;
    max_degree = std::max(max_degree, d);
  }

  ModularityReport report;
  report.mode = mode;
  report.cluster_count = k;
  report.exact = {
      .denominator = 4 * total * total,
      .q = 4 * total * intra - sum_squares,
      .intra = 4 * total * intra,
      .alpha = 2 * total * max_degree,
  };

  const auto &exact = report.exact;
  report.q_c = to_double(exact.q, exact.denominator);
  report.alpha_c = to_double(exact.alpha, exact.denominator);
  report.intra_fraction = to_double(intra, total);
  report.inter_fraction = to_double(total - intra, total);

  const Graph coarse = contract(graph, clustering).coarse;
  const double m = static_cast<double>(graph.m());
  report.parallel_fraction = static_cast<double>(inter_edges - coarse.m()) / m;
  report.coarse_edge_fraction = static_cast<double>(coarse.m()) / m;
  report.coarse_weight_fraction =
      static_cast<double>(coarse.total_edge_weight()) / graph.total_edge_weight();
  report.lemma_lower_bound = 1.0 - report.q_c - report.alpha_c - report.parallel_fraction;
  return report;
}

EdgeReductionRecord edge_reduction_study(const Graph &graph, const Clustering &clustering) {
  const ModularityReport report = modularity_report(graph, clustering);
  return {
      .cluster_count = clustering.cluster_count(),
      .remaining_weight_fraction = report.coarse_weight_fraction,
      .remaining_edge_fraction = report.coarse_edge_fraction,
      .q_c = report.q_c,
      .bound_1_minus_qc = 1.0 - report.q_c,
      .alpha_c = report.alpha_c,
  };
}

EdgeReductionRecord edge_reduction_study(const Graph &graph, const PartitionerConfig &cfg) {
  return edge_reduction_study(graph, coarsening_clustering(graph, coarsening_params(graph, cfg, 1)));
}

nlohmann::ordered_json to_json(const ModularityReport &report) {
  return {
      {"mode", report.mode == ModularityMode::kWeighted ? "weighted" : "unweighted"},
      {"cluster_count", report.cluster_count},
      {"q_c", report.q_c},
      {"alpha_c", report.alpha_c},
      {"intra_fraction", report.intra_fraction},
      {"inter_fraction", report.inter_fraction},
      {"parallel_fraction", report.parallel_fraction},
      {"coarse_edge_fraction", report.coarse_edge_fraction},
      {"coarse_weight_fraction", report.coarse_weight_fraction},
      {"lemma_lower_bound", report.lemma_lower_bound},
      {"sandwich_holds", report.exact.sandwich_holds()},
  };
}

nlohmann::ordered_json to_json(const EdgeReductionRecord &record) {
  return {
      {"cluster_count", record.cluster_count},
      {"remaining_weight_fraction", record.remaining_weight_fraction},
      {"remaining_edge_fraction", record.remaining_edge_fraction},
      {"q_c", record.q_c},
      {"bound_1_minus_qc", record.bound_1_minus_qc},
      {"alpha_c", record.alpha_c},
  };
}

namespace {
void write_json_as_csv(const nlohmann::ordered_json &row, std::ostream &out) {
  bool first = true;
  for (const auto &[key, value] : row.items()) {
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << '\n';
  first = true;
  for (const auto &[key, value] : row.items()) {
    out << (first ? "" : ",") << (value.is_string() ? value.get<std::string>() : value.dump());
    first = false;
  }
  out << '\n';
}
} // namespace

void write_csv(const ModularityReport &report, std::ostream &out) {
  write_json_as_csv(to_json(report), out);
}

void write_csv(const EdgeReductionRecord &record, std::ostream &out) {
  write_json_as_csv(to_json(record), out);
}
} // namespace lmpart
