/*******************************************************************************
 * METIS graph format IO.
 *
 * @file:   metis_io.cc
 ******************************************************************************/
#include "lmpart/metis_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <vector>

namespace lmpart {
namespace {
class LineReader {
public:
  explicit LineReader(const std::string_view contents) : _contents(contents) {}

  // Next non-comment line; false at end of input.
  bool next(std::string_view &line) {
    while (_pos < _contents.size()) {
      const std::size_t end = std::min(_contents.find('\n', _pos), _contents.size());
      line = _contents.substr(_pos, end - _pos);
      _pos = end + 1;
      ++_line_number;
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      if (!line.empty() && line.front() == '%') {
        continue;
      }
      return true;
    }
    return false;
  }

  [[nodiscard]] std::size_t line_number() const {
    return _line_number;
  }

private:
  std::string_view _contents;
  std::size_t _pos = 0;
  std::size_t _line_number = 0;
};

[[noreturn]] void fail(const std::size_t line, const std::string &what) {
  throw IOError("malformed METIS input (line " + std::to_string(line) + "): " + what);
}

bool is_space(const char c) {
  return c == ' ' || c == '\t';
}

// Splits a line into unsigned integer tokens.
bool tokenize(std::string_view line, std::vector<std::uint64_t> &tokens) {
  tokens.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) {
      ++i;
    }
    if (i == line.size()) {
      break;
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{} || (ptr != line.data() + line.size() && !is_space(*ptr))) {
      return false;
    }
    tokens.push_back(value);
    i = ptr - line.data();
  }
  return true;
}
} // namespace

Graph parse_metis(const std::string_view contents) {
  LineReader reader(contents);
  std::string_view line;
  std::vector<std::uint64_t> tokens;

  if (!reader.next(line)) {
    fail(reader.line_number(), "missing header");
  }

  // The fmt field is a digit string, e.g. "011"; parse it textually.
  std::vector<std::string_view> header_fields;
  for (std::size_t i = 0; i < line.size();) {
    while (i < line.size() && is_space(line[i])) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) {
      ++i;
    }
    if (start < i) {
      header_fields.push_back(line.substr(start, i - start));
    }
  }
  if (header_fields.size() < 2 || header_fields.size() > 4) {
    fail(reader.line_number(), "header must be \"n m [fmt [ncon]]\"");
  }
  if (!tokenize(header_fields[0], tokens) || tokens.size() != 1 ||
      tokens[0] > std::numeric_limits<NodeID>::max() - 1) {
    fail(reader.line_number(), "invalid node count");
  }
  const auto n = static_cast<NodeID>(tokens[0]);
  if (!tokenize(header_fields[1], tokens) || tokens.size() != 1) {
    fail(reader.line_number(), "invalid edge count");
  }
  const EdgeID m = tokens[0];

  bool has_edge_weights = false;
  bool has_node_weights = false;
  if (header_fields.size() >= 3) {
    const std::string_view fmt = header_fields[2];
    if (fmt.size() > 3 || !std::all_of(fmt.begin(), fmt.end(), [](char c) {
          return c == '0' || c == '1';
        })) {
      fail(reader.line_number(), "invalid fmt field");
    }
    has_edge_weights = fmt.back() == '1';
    has_node_weights = fmt.size() >= 2 && fmt[fmt.size() - 2] == '1';
    if (fmt.size() == 3 && fmt[0] == '1') {
      fail(reader.line_number(), "vertex sizes are not supported");
    }
  }
  if (header_fields.size() == 4) {
    if (!tokenize(header_fields[3], tokens) || tokens.size() != 1 ||
        tokens[0] > (has_node_weights ? 1u : 0u)) {
      fail(reader.line_number(), "only a single node weight per node is supported");
    }
  }

  std::vector<EdgeID> offsets(n + 1, 0);
  std::vector<NodeID> targets;
  std::vector<EdgeWeight> edge_weights;
  std::vector<NodeWeight> node_weights(n, 1);
  targets.reserve(2 * m);
  edge_weights.reserve(2 * m);

  std::vector<std::pair<NodeID, EdgeWeight>> row;
  for (NodeID u = 0; u < n; ++u) {
    if (!reader.next(line)) {
      fail(reader.line_number(), "expected " + std::to_string(n) + " node lines, found " +
                                     std::to_string(u));
    }
    if (!tokenize(line, tokens)) {
      fail(reader.line_number(), "non-numeric token");
    }

    std::size_t pos = 0;
    if (has_node_weights) {
      if (tokens.empty() || tokens[0] == 0) {
        fail(reader.line_number(), "missing or zero node weight");
      }
      node_weights[u] = static_cast<NodeWeight>(tokens[0]);
      pos = 1;
    }
    const std::size_t stride = has_edge_weights ? 2 : 1;
    if ((tokens.size() - pos) % stride != 0) {
      fail(reader.line_number(), "edge weight flag inconsistent with line contents");
    }

    row.clear();
    for (; pos < tokens.size(); pos += stride) {
      const std::uint64_t v = tokens[pos];
      if (v == 0 || v > n) {
        fail(reader.line_number(), "neighbor id " + std::to_string(v) + " out of range");
      }
      if (v - 1 == u) {
        fail(reader.line_number(), "self-loop");
      }
      const EdgeWeight w = has_edge_weights ? static_cast<EdgeWeight>(tokens[pos + 1]) : 1;
      if (w < 1) {
        fail(reader.line_number(), "non-positive edge weight");
      }
      row.emplace_back(static_cast<NodeID>(v - 1), w);
    }
    std::sort(row.begin(), row.end());
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0 && row[i - 1].first == row[i].first) {
        fail(reader.line_number(), "duplicate neighbor");
      }
      targets.push_back(row[i].first);
      edge_weights.push_back(row[i].second);
    }
    offsets[u + 1] = targets.size();
  }

  while (reader.next(line)) {
    if (!std::all_of(line.begin(), line.end(), is_space)) {
      fail(reader.line_number(), "trailing content after the last node");
    }
  }

  if (targets.size() != 2 * m) {
    fail(reader.line_number(), "header announces " + std::to_string(m) +
                                   " edges but adjacency lists contain " +
                                   std::to_string(targets.size()) + " entries");
  }

  Graph graph(std::move(offsets), std::move(targets), std::move(edge_weights),
              std::move(node_weights));
  if (const auto violation = find_violation(graph)) {
    throw IOError("invalid METIS graph: " + *violation);
  }
  return graph;
}

Graph read_metis(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IOError("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_metis(buffer.str());
}

std::string format_metis(const Graph &graph) {
  const auto vwgt = graph.raw_node_weights();
  const auto ewgt = graph.raw_edge_weights();
  const bool has_node_weights = std::any_of(vwgt.begin(), vwgt.end(), [](auto w) { return w != 1; });
  const bool has_edge_weights = std::any_of(ewgt.begin(), ewgt.end(), [](auto w) { return w != 1; });

  std::string out;
  out.reserve(16 * (graph.n() + graph.directed_edge_count()));
  out += std::to_string(graph.n());
  out += ' ';
  out += std::to_string(graph.m());
  if (has_node_weights) {
    out += has_edge_weights ? " 11" : " 10";
  } else if (has_edge_weights) {
    out += " 1";
  }
  out += '\n';

  char buf[32];
  const auto append = [&](const std::uint64_t value) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    out.append(buf, ptr);
  };

  for (NodeID u = 0; u < graph.n(); ++u) {
    bool first = true;
    const auto separator = [&] {
      if (!first) {
        out += ' ';
      }
      first = false;
    };
    if (has_node_weights) {
      separator();
      append(graph.node_weight(u));
    }
    const auto neighbors = graph.neighbors(u);
    const auto weights = graph.neighbor_weights(u);
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
      separator();
      append(neighbors[i] + 1ULL);
      if (has_edge_weights) {
        out += ' ';
        append(weights[i]);
      }
    }
    out += '\n';
  }
  return out;
}

void write_metis(const Graph &graph, std::ostream &out) {
  out << format_metis(graph);
}

void write_metis(const Graph &graph, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IOError("cannot open " + path.string() + " for writing");
  }
  write_metis(graph, out);
  if (!out) {
    throw IOError("failed writing " + path.string());
  }
}
} // namespace lmpart
