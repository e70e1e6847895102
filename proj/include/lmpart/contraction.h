/*******************************************************************************
 * Cluster contraction.
 *
 * Each cluster becomes a coarse node whose weight is the cluster weight. Edges
 * between two clusters are merged into one coarse edge carrying their summed
 * weight; intra-cluster edges disappear.
 *
 * @file:   contraction.h
 ******************************************************************************/
#pragma once

#include <vector>

#include "lmpart/clustering.h"
#include "lmpart/graph.h"

namespace lmpart {
struct ContractionResult {
  Graph coarse;
  std::vector<NodeID> fine_to_coarse;
};

// Linear time in the size of the fine graph. The clustering must use dense
// cluster ids.
[[nodiscard]] ContractionResult contract(const Graph &graph, const Clustering &clustering);
} // namespace lmpart
