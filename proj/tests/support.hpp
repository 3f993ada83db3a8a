#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "bvhnet/paths.hpp"
#include "bvhnet/topology.hpp"

namespace bvhnet::testkit {

inline Graph make(Family family, int n) { return build_graph(TopologySpec(family, n)); }

inline NodeId node(const Graph& g, std::string_view label) { return g.id_of(NodeLabel::parse(label)); }

inline std::vector<NodeLabel> labels(std::initializer_list<std::string_view> texts) {
  std::vector<NodeLabel> out;
  for (auto t : texts) out.push_back(NodeLabel::parse(t));
  std::sort(out.begin(), out.end());
  return out;
}

// Splits "0,0 1,1 2,3" into node ids.
inline Path parse_path(const Graph& g, std::string_view text) {
  Path path;
  while (!text.empty()) {
    const auto space = text.find(' ');
    path.push_back(node(g, text.substr(0, space)));
    if (space == std::string_view::npos) break;
    text.remove_prefix(space + 1);
  }
  return path;
}

// All-pairs distances by Floyd-Warshall on the adjacency matrix.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  constexpr int inf = std::numeric_limits<int>::max() / 4;
  const std::size_t n = g.node_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (NodeId j : g.neighbors(static_cast<NodeId>(i))) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x == inf) x = -1;
  return d;
}

// Every simple s-t path, by depth-first enumeration.
inline std::vector<Path> simple_paths(const Graph& g, NodeId s, NodeId t) {
  std::vector<Path> out;
  Path current{s};
  std::vector<bool> on_path(g.node_count(), false);
  on_path[s] = true;
  auto dfs = [&](auto&& self, NodeId u) -> void {
    if (u == t) {
      out.push_back(current);
      return;
    }
    for (NodeId v : g.neighbors(u)) {
      if (on_path[v]) continue;
      on_path[v] = true;
      current.push_back(v);
      self(self, v);
      current.pop_back();
      on_path[v] = false;
    }
  };
  dfs(dfs, s);
  return out;
}

// Largest set of internally vertex-disjoint s-t paths, by exhaustive search
// over the simple paths. Graphs up to 64 nodes.
inline int brute_force_disjoint(const Graph& g, NodeId s, NodeId t) {
  std::vector<std::uint64_t> masks;
  for (const Path& p : simple_paths(g, s, t)) {
    std::uint64_t m = 0;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) m |= std::uint64_t{1} << p[i];
    masks.push_back(m);
  }
  int best = 0;
  auto search = [&](auto&& self, std::size_t from, std::uint64_t used, int count) -> void {
    best = std::max(best, count);
    for (std::size_t i = from; i < masks.size(); ++i) {
      if ((masks[i] & used) == 0) self(self, i + 1, used | masks[i], count + 1);
    }
  };
  search(search, 0, 0, 0);
  return best;
}

inline Graph random_graph(std::size_t n, double p, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace bvhnet::testkit
