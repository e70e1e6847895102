/*******************************************************************************
 * Erdos-Renyi and planted partition generators.
 *
 * @file:   generators.cc
 ******************************************************************************/
#include "lmpart/generators.h"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lmpart/random.h"

namespace lmpart {
namespace {
void check_probability(const double p, const char *name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

double pair_count(const double n) {
  return n * (n - 1.0) / 2.0;
}

double er_probability(const GeneratorSpec &spec) {
  if (spec.expected_edges) {
    const double pairs = pair_count(spec.node_count);
    return pairs > 0.0 ? std::min(1.0, *spec.expected_edges / pairs) : 0.0;
  }
  return spec.edge_probability;
}

// Calls emit(index) for every index in [0, count) independently with
// probability p, jumping over absent indices with geometric skips.
template <typename Emit>
void sample_indices(const std::uint64_t count, const double p, Random &rng, Emit &&emit) {
  if (p <= 0.0 || count == 0) {
    return;
  }
  if (p >= 1.0) {
    for (std::uint64_t i = 0; i < count; ++i) {
      emit(i);
    }
    return;
  }

  const double log_q = std::log1p(-p);
  std::uint64_t next = 0;
  while (true) {
    const double r = rng.next_unit();
    const double skip = std::floor(std::log1p(-r) / log_q);
    if (skip >= static_cast<double>(count - next)) {
      return;
    }
    next += static_cast<std::uint64_t>(skip);
    emit(next);
    if (++next >= count) {
      return;
    }
  }
}

// Pairs {members[i], members[j]} with j < i, indexed row by row.
void sample_triangle(const std::vector<NodeID> &members, const double p, Random &rng,
                     std::vector<WeightedEdge> &edges) {
  const std::uint64_t size = members.size();
  std::uint64_t row = 1;
  std::uint64_t row_start = 0;
  sample_indices(size * (size - 1) / 2, p, rng, [&](const std::uint64_t index) {
    while (index >= row_start + row) {
      row_start += row;
      ++row;
    }
    edges.push_back({members[row], members[index - row_start], 1});
  });
}

void sample_rectangle(const std::vector<NodeID> &lhs, const std::vector<NodeID> &rhs,
                      const double p, Random &rng, std::vector<WeightedEdge> &edges) {
  const std::uint64_t width = rhs.size();
  sample_indices(lhs.size() * width, p, rng, [&](const std::uint64_t index) {
    edges.push_back({lhs[index / width], rhs[index % width], 1});
  });
}
} // namespace

double expected_edge_count(const GeneratorSpec &spec) {
  const double n = spec.node_count;
  if (spec.kind == GeneratorKind::kErdosRenyi) {
    return er_probability(spec) * pair_count(n);
  }

  double intra_pairs = 0.0;
  for (BlockID b = 0; b < spec.block_count && b < spec.node_count; ++b) {
    const double size = static_cast<double>((spec.node_count - 1 - b) / spec.block_count + 1);
    intra_pairs += pair_count(size);
  }
  return spec.intra_probability * intra_pairs +
         spec.inter_probability * (pair_count(n) - intra_pairs);
}

std::vector<BlockID> planted_assignment(const GeneratorSpec &spec) {
  std::vector<BlockID> assignment(spec.node_count);
  for (NodeID u = 0; u < spec.node_count; ++u) {
    assignment[u] = u % spec.block_count;
  }
  return assignment;
}

Graph generate(const GeneratorSpec &spec) {
  Random rng(mix_seed(spec.seed, static_cast<std::uint64_t>(spec.kind)));
  std::vector<WeightedEdge> edges;

  if (spec.kind == GeneratorKind::kErdosRenyi) {
    const double p = er_probability(spec);
    check_probability(p, "edge probability");
    if (expected_edge_count(spec) > spec.max_expected_edges) {
      throw std::invalid_argument("expected edge count exceeds the generator memory budget");
    }
    edges.reserve(static_cast<std::size_t>(expected_edge_count(spec) * 1.01) + 16);

    std::vector<NodeID> members(spec.node_count);
    std::iota(members.begin(), members.end(), NodeID{0});
    sample_triangle(members, p, rng, edges);
  } else {
    check_probability(spec.intra_probability, "intra-block probability");
    check_probability(spec.inter_probability, "inter-block probability");
    if (spec.block_count < 2) {
      throw std::invalid_argument("planted partition needs at least two blocks");
    }
    if (expected_edge_count(spec) > spec.max_expected_edges) {
      throw std::invalid_argument("expected edge count exceeds the generator memory budget");
    }
    edges.reserve(static_cast<std::size_t>(expected_edge_count(spec) * 1.01) + 16);

    std::vector<std::vector<NodeID>> blocks(spec.block_count);
    for (NodeID u = 0; u < spec.node_count; ++u) {
      blocks[u % spec.block_count].push_back(u);
    }
    for (BlockID a = 0; a < spec.block_count; ++a) {
      sample_triangle(blocks[a], spec.intra_probability, rng, edges);
      for (BlockID b = a + 1; b < spec.block_count; ++b) {
        sample_rectangle(blocks[a], blocks[b], spec.inter_probability, rng, edges);
      }
    }
  }

  return build_graph(spec.node_count, edges);
}
} // namespace lmpart
