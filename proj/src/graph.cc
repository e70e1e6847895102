/*******************************************************************************
 * Graph construction and validation.
 *
 * @file:   graph.cc
 ******************************************************************************/
#include "lmpart/graph.h"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lmpart {
Graph::Graph(std::vector<EdgeID> offsets, std::vector<NodeID> targets,
             std::vector<EdgeWeight> edge_weights, std::vector<NodeWeight> node_weights)
    : _offsets(std::move(offsets)),
      _targets(std::move(targets)),
      _edge_weights(std::move(edge_weights)),
      _node_weights(std::move(node_weights)) {
  for (const NodeWeight w : _node_weights) {
    _total_node_weight += w;
    _max_node_weight = std::max(_max_node_weight, w);
  }
  EdgeWeight directed_sum = 0;
  for (const EdgeWeight w : _edge_weights) {
    directed_sum += w;
  }
  _total_edge_weight = directed_sum / 2;
}

EdgeWeight Graph::weighted_degree(const NodeID u) const {
  EdgeWeight sum = 0;
  for (const EdgeWeight w : neighbor_weights(u)) {
    sum += w;
  }
  return sum;
}

Graph build_graph(const NodeID n, const std::span<const WeightedEdge> edges,
                  const std::span<const NodeWeight> node_weights, const SelfLoopPolicy self_loops) {
  if (!node_weights.empty() && node_weights.size() != n) {
    throw GraphError("node weight count does not match node count");
  }

  std::vector<NodeWeight> vwgt(n, 1);
  for (NodeID u = 0; u < node_weights.size(); ++u) {
    if (node_weights[u] < 1) {
      throw GraphError("node " + std::to_string(u) + " has non-positive weight");
    }
    vwgt[u] = node_weights[u];
  }

  std::vector<WeightedEdge> directed;
  directed.reserve(2 * edges.size());
  for (const auto &[u, v, w] : edges) {
    if (u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") references a node out of range");
    }
    if (w < 1) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has non-positive weight");
    }
    if (u == v) {
      if (self_loops == SelfLoopPolicy::kReject) {
        throw GraphError("self-loop at node " + std::to_string(u));
      }
      continue;
    }
    directed.push_back({u, v, w});
    directed.push_back({v, u, w});
  }

  std::sort(directed.begin(), directed.end(), [](const auto &lhs, const auto &rhs) {
    return lhs.u < rhs.u || (lhs.u == rhs.u && lhs.v < rhs.v);
  });

  std::vector<EdgeID> offsets(n + 1, 0);
  std::vector<NodeID> targets;
  std::vector<EdgeWeight> edge_weights;
  targets.reserve(directed.size());
  edge_weights.reserve(directed.size());

  for (std::size_t i = 0; i < directed.size(); ++i) {
    const auto &[u, v, w] = directed[i];
    if (i > 0 && directed[i - 1].u == u && directed[i - 1].v == v) {
      edge_weights.back() += w;
    } else {
      targets.push_back(v);
      edge_weights.push_back(w);
      ++offsets[u + 1];
    }
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());

  return {std::move(offsets), std::move(targets), std::move(edge_weights), std::move(vwgt)};
}

std::optional<std::string> find_violation(const Graph &graph) {
  const auto offsets = graph.raw_offsets();
  const NodeID n = graph.n();
  std::ostringstream msg;

  if (offsets.size() != static_cast<std::size_t>(n) + 1 || offsets.front() != 0 ||
      offsets.back() != graph.directed_edge_count() ||
      graph.raw_edge_weights().size() != graph.directed_edge_count()) {
    return "inconsistent array sizes";
  }
  if (graph.directed_edge_count() % 2 != 0) {
    return "odd number of directed adjacency entries";
  }

  NodeWeight total = 0;
  for (NodeID u = 0; u < n; ++u) {
    if (offsets[u] > offsets[u + 1]) {
      return "offsets are not monotone";
    }
    if (graph.node_weight(u) < 1) {
      msg << "node " << u << " has non-positive weight";
      return msg.str();
    }
    total += graph.node_weight(u);

    const auto neighbors = graph.neighbors(u);
    const auto weights = graph.neighbor_weights(u);
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
      const NodeID v = neighbors[i];
      if (v >= n) {
        msg << "node " << u << " has neighbor " << v << " out of range";
        return msg.str();
      }
      if (v == u) {
        msg << "self-loop at node " << u;
        return msg.str();
      }
      if (i > 0 && neighbors[i - 1] >= v) {
        msg << "adjacency of node " << u << " is unsorted or contains duplicates";
        return msg.str();
      }
      if (weights[i] < 1) {
        msg << "edge (" << u << ", " << v << ") has non-positive weight";
        return msg.str();
      }

      const auto reverse = graph.neighbors(v);
      const auto it = std::lower_bound(reverse.begin(), reverse.end(), u);
      if (it == reverse.end() || *it != u) {
        msg << "edge (" << u << ", " << v << ") has no reverse edge";
        return msg.str();
      }
      if (graph.neighbor_weights(v)[it - reverse.begin()] != weights[i]) {
        msg << "edge (" << u << ", " << v << ") has asymmetric weight";
        return msg.str();
      }
    }
  }

  if (total != graph.total_node_weight()) {
    return "cached total node weight is stale";
  }
  return std::nullopt;
}

void validate(const Graph &graph) {
  if (const auto violation = find_violation(graph)) {
    throw GraphError(*violation);
  }
}

std::vector<EdgeID> undirected_edge_ids(const Graph &graph) {
  const NodeID n = graph.n();
  std::vector<EdgeID> ids(graph.directed_edge_count());
  std::vector<EdgeID> cursor(n);

  EdgeID next_id = 0;
  for (NodeID u = 0; u < n; ++u) {
    const auto neighbors = graph.neighbors(u);
    const EdgeID base = graph.first_edge(u);
    const auto split = std::upper_bound(neighbors.begin(), neighbors.end(), u) - neighbors.begin();
    cursor[u] = base + split;

    // Backward entries pair up with the forward entries of smaller nodes,
    // which are consumed in increasing order of u.
    for (std::ptrdiff_t i = 0; i < split; ++i) {
      const NodeID v = neighbors[i];
      ids[base + i] = ids[cursor[v]++];
    }
    for (std::size_t i = split; i < neighbors.size(); ++i) {
      ids[base + i] = next_id++;
    }
  }
  return ids;
}

std::vector<WeightedEdge> edge_list(const Graph &graph) {
  std::vector<WeightedEdge> edges;
  edges.reserve(graph.m());
  for (NodeID u = 0; u < graph.n(); ++u) {
    const auto neighbors = graph.neighbors(u);
    const auto weights = graph.neighbor_weights(u);
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
      if (u < neighbors[i]) {
        edges.push_back({u, neighbors[i], weights[i]});
      }
    }
  }
  return edges;
}

Graph filter_edges(const Graph &graph, const std::span<const EdgeID> edge_ids,
                   const std::vector<bool> &keep) {
  const NodeID n = graph.n();
  std::vector<EdgeID> offsets(n + 1, 0);
  std::vector<NodeID> targets;
  std::vector<EdgeWeight> edge_weights;

  for (NodeID u = 0; u < n; ++u) {
    for (EdgeID e = graph.first_edge(u); e < graph.first_invalid_edge(u); ++e) {
      if (keep[edge_ids[e]]) {
        targets.push_back(graph.edge_target(e));
        edge_weights.push_back(graph.edge_weight(e));
      }
    }
    offsets[u + 1] = targets.size();
  }

  const auto vwgt = graph.raw_node_weights();
  return {std::move(offsets), std::move(targets), std::move(edge_weights),
          std::vector<NodeWeight>(vwgt.begin(), vwgt.end())};
}
} // namespace lmpart
