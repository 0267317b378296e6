#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sdgnn/common.hpp"

namespace sdgnn {

/// Undirected graph in CSR form. Each undirected edge is stored as two
/// directed arcs; rows are sorted, self-loop free and duplicate free.
struct Graph {
  std::uint64_t num_nodes = 0;
  std::vector<std::uint64_t> row_offsets;  // n+1, row_offsets[n] == 2m
  std::vector<NodeId> col_indices;         // 2m, sorted within each row

  std::uint64_t num_arcs() const { return col_indices.size(); }
  std::uint64_t num_edges() const { return num_arcs() / 2; }

  std::size_t degree(NodeId z) const { return row_offsets[z + 1] - row_offsets[z]; }

  std::span<const NodeId> neighbors(NodeId z) const {
    return {col_indices.data() + row_offsets[z],
            col_indices.data() + row_offsets[z + 1]};
  }
};

/// Builds a symmetric CSR graph from raw edge pairs. Self-loops are dropped,
/// duplicates (including reversed duplicates) are merged.
inline Graph build_graph(std::uint64_t num_nodes, std::vector<std::pair<NodeId, NodeId>> edges) {
  std::vector<std::pair<NodeId, NodeId>> arcs;
  arcs.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.num_nodes = num_nodes;
  g.row_offsets.assign(num_nodes + 1, 0);
  g.col_indices.resize(arcs.size());
  for (const auto& [u, v] : arcs) ++g.row_offsets[u + 1];
  for (std::uint64_t i = 0; i < num_nodes; ++i) g.row_offsets[i + 1] += g.row_offsets[i];
  for (std::size_t i = 0; i < arcs.size(); ++i) g.col_indices[i] = arcs[i].second;
  return g;
}

/// Parses a whitespace-separated "u v" edge list. Lines starting with '#'
/// and blank lines are ignored; ids must lie in [0, num_nodes).
inline Graph load_graph(const std::string& path, std::uint64_t num_nodes) {
  std::ifstream in(path);
  if (!in) throw io_error(path + ": cannot open for reading");

  std::vector<std::pair<NodeId, NodeId>> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first) || first[0] == '#') continue;
    long long u, v;
    std::istringstream tok(first);
    std::string extra;
    if (!(tok >> u) || (tok >> extra) || !(ss >> v) || (ss >> extra))
      throw io_error(path + ": line " + std::to_string(lineno) + ": expected \"u v\"");
    if (u < 0 || v < 0 || static_cast<std::uint64_t>(u) >= num_nodes ||
        static_cast<std::uint64_t>(v) >= num_nodes)
      throw io_error(path + ": line " + std::to_string(lineno) + ": node id out of range [0, " +
                     std::to_string(num_nodes) + ")");
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  if (edges.empty()) throw io_error(path + ": empty edge list");
  return build_graph(num_nodes, std::move(edges));
}

// Graph binary cache "SDG1":
//   magic | n u64 | 2m u64 | row_offsets (n+1 u64) | col_indices (2m u64).
inline void save_graph_cache(const std::string& path, const Graph& g) {
  auto out = open_output(path);
  write_magic(out, "SDG1");
  write_u64(out, g.num_nodes);
  write_u64(out, g.num_arcs());
  for (std::uint64_t v : g.row_offsets) write_u64(out, v);
  for (NodeId v : g.col_indices) write_u64(out, v);
  if (!out) throw io_error(path + ": write failed");
}

inline Graph load_graph_cache(const std::string& path) {
  auto in = open_input(path);
  expect_magic(in, "SDG1", path);
  Graph g;
  g.num_nodes = read_u64(in, path);
  const std::uint64_t arcs = read_u64(in, path);
  g.row_offsets.resize(g.num_nodes + 1);
  for (auto& v : g.row_offsets) v = read_u64(in, path);
  g.col_indices.resize(arcs);
  for (auto& v : g.col_indices) v = read_u64(in, path);
  expect_eof(in, path);
  if (g.row_offsets.front() != 0 || g.row_offsets.back() != arcs)
    throw io_error(path + ": inconsistent CSR offsets");
  for (NodeId v : g.col_indices)
    if (v >= g.num_nodes) throw io_error(path + ": column index out of range");
  return g;
}

/// Symmetric degree-normalized adjacency: weight(u,v) = 1/sqrt(deg(u)*deg(v)).
struct NormalizedAdjacency {
  std::uint64_t num_nodes = 0;
  std::vector<std::uint64_t> row_offsets;
  std::vector<NodeId> col_indices;
  std::vector<double> weights;  // parallel to col_indices

  std::size_t degree(NodeId z) const { return row_offsets[z + 1] - row_offsets[z]; }

  std::span<const NodeId> neighbors(NodeId z) const {
    return {col_indices.data() + row_offsets[z],
            col_indices.data() + row_offsets[z + 1]};
  }

  std::span<const double> row_weights(NodeId z) const {
    return {weights.data() + row_offsets[z], weights.data() + row_offsets[z + 1]};
  }
};

inline NormalizedAdjacency normalized_adjacency(const Graph& g) {
  NormalizedAdjacency na;
  na.num_nodes = g.num_nodes;
  na.row_offsets = g.row_offsets;
  na.col_indices = g.col_indices;
  na.weights.resize(g.col_indices.size());
  for (NodeId u = 0; u < g.num_nodes; ++u) {
    const double du = static_cast<double>(g.degree(u));
    for (std::uint64_t a = g.row_offsets[u]; a < g.row_offsets[u + 1]; ++a) {
      const double dv = static_cast<double>(g.degree(g.col_indices[a]));
      na.weights[a] = 1.0 / std::sqrt(du * dv);
    }
  }
  return na;
}

}  // namespace sdgnn
