/*******************************************************************************
 * Immutable weighted undirected graph in compressed adjacency form.
 *
 * Every undirected edge {u, v} is stored twice, once in the adjacency of u and
 * once in the adjacency of v. Adjacency rows are sorted by neighbor id.
 *
 * @file:   graph.h
 ******************************************************************************/
#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lmpart/definitions.h"

namespace lmpart {
class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class Graph {
public:
  Graph() : _offsets{0} {}

  // Takes ownership of already canonical CSR arrays. No validation is
  // performed; use validate() for untrusted input.
  Graph(std::vector<EdgeID> offsets, std::vector<NodeID> targets,
        std::vector<EdgeWeight> edge_weights, std::vector<NodeWeight> node_weights);

  [[nodiscard]] NodeID n() const {
    return static_cast<NodeID>(_node_weights.size());
  }

  // Number of undirected edges.
  [[nodiscard]] EdgeID m() const {
    return _targets.size() / 2;
  }

  [[nodiscard]] EdgeID directed_edge_count() const {
    return _targets.size();
  }

  [[nodiscard]] NodeWeight node_weight(const NodeID u) const {
    return _node_weights[u];
  }

  [[nodiscard]] NodeWeight total_node_weight() const {
    return _total_node_weight;
  }

  [[nodiscard]] NodeWeight max_node_weight() const {
    return _max_node_weight;
  }

  // Sum of undirected edge weights.
  [[nodiscard]] EdgeWeight total_edge_weight() const {
    return _total_edge_weight;
  }

  [[nodiscard]] EdgeID first_edge(const NodeID u) const {
    return _offsets[u];
  }

  [[nodiscard]] EdgeID first_invalid_edge(const NodeID u) const {
    return _offsets[u + 1];
  }

  [[nodiscard]] NodeID degree(const NodeID u) const {
    return static_cast<NodeID>(_offsets[u + 1] - _offsets[u]);
  }

  [[nodiscard]] EdgeWeight weighted_degree(NodeID u) const;

  [[nodiscard]] NodeID edge_target(const EdgeID e) const {
    return _targets[e];
  }

  [[nodiscard]] EdgeWeight edge_weight(const EdgeID e) const {
    return _edge_weights[e];
  }

  [[nodiscard]] std::span<const NodeID> neighbors(const NodeID u) const {
    return {_targets.data() + _offsets[u], degree(u)};
  }

  [[nodiscard]] std::span<const EdgeWeight> neighbor_weights(const NodeID u) const {
    return {_edge_weights.data() + _offsets[u], degree(u)};
  }

  [[nodiscard]] std::span<const EdgeID> raw_offsets() const {
    return _offsets;
  }
  [[nodiscard]] std::span<const NodeID> raw_targets() const {
    return _targets;
  }
  [[nodiscard]] std::span<const EdgeWeight> raw_edge_weights() const {
    return _edge_weights;
  }
  [[nodiscard]] std::span<const NodeWeight> raw_node_weights() const {
    return _node_weights;
  }

  friend bool operator==(const Graph &lhs, const Graph &rhs) {
    return lhs._offsets == rhs._offsets && lhs._targets == rhs._targets &&
           lhs._edge_weights == rhs._edge_weights && lhs._node_weights == rhs._node_weights;
  }

private:
  std::vector<EdgeID> _offsets;
  std::vector<NodeID> _targets;
  std::vector<EdgeWeight> _edge_weights;
  std::vector<NodeWeight> _node_weights;
  NodeWeight _total_node_weight = 0;
  NodeWeight _max_node_weight = 0;
  EdgeWeight _total_edge_weight = 0;
};

struct WeightedEdge {
  NodeID u;
  NodeID v;
  EdgeWeight weight = 1;
};

enum class SelfLoopPolicy {
  kReject,
  kDrop,
};

// Builds a validated graph with n nodes. Duplicate pairs are merged by summing
// their weights. An empty node weight span means unit node weights.
[[nodiscard]] Graph build_graph(NodeID n, std::span<const WeightedEdge> edges,
                                std::span<const NodeWeight> node_weights = {},
                                SelfLoopPolicy self_loops = SelfLoopPolicy::kReject);

// Returns a description of the first violated structural invariant, if any.
[[nodiscard]] std::optional<std::string> find_violation(const Graph &graph);

// Throws GraphError if the graph violates any structural invariant.
void validate(const Graph &graph);

// For every directed adjacency entry, the id of its undirected edge. Undirected
// edges are numbered in (min endpoint, max endpoint) lexicographic order, so
// both directions of an edge share one id. Runs in linear time.
[[nodiscard]] std::vector<EdgeID> undirected_edge_ids(const Graph &graph);

// Undirected edges (u < v) in canonical order.
[[nodiscard]] std::vector<WeightedEdge> edge_list(const Graph &graph);

// Keeps exactly the undirected edges whose canonical id is marked in `keep`.
// Node set and node weights are unchanged.
[[nodiscard]] Graph filter_edges(const Graph &graph, std::span<const EdgeID> edge_ids,
                                 const std::vector<bool> &keep);
} // namespace lmpart
