#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "nestcx/errors.hpp"
#include "nestcx/subset.hpp"

namespace nestcx {

/// Finite simple graph on vertices {0, ..., vertex_count-1}.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // normalized: i < j, sorted, unique

  static Graph make(int n, std::vector<std::pair<int, int>> raw_edges) {
    if (n < 1) throw Error(Errc::empty_ground, "graph needs at least one vertex");
    if (n > GroundSet::kMaxSize)
      throw Error(Errc::too_large, "graph on more than " + std::to_string(GroundSet::kMaxSize) + " vertices");
    Graph g;
    g.vertex_count = n;
    for (auto [a, b] : raw_edges) {
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw Error(Errc::parse_error, "edge endpoint out of range");
      if (a == b) throw Error(Errc::parse_error, "loop edge not allowed");
      g.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
  }

  /// Neighbor bit mask per vertex.
  [[nodiscard]] std::vector<Subset> adjacency() const {
    std::vector<Subset> adj(vertex_count);
    for (auto [a, b] : edges) {
      adj[a] = adj[a].with(b);
      adj[b] = adj[b].with(a);
    }
    return adj;
  }

  /// True if the vertices of sub induce a connected subgraph (singletons count).
  [[nodiscard]] bool connected_within(Subset sub, const std::vector<Subset>& adj) const {
    if (sub.empty()) return false;
    Subset reach = Subset::single(sub.min_element());
    for (;;) {
      Subset next = reach;
      for (int v : reach.elements()) next = next | (adj[v] & sub);
      if (next == reach) break;
      reach = next;
    }
    return reach == sub;
  }
};

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; i++) e.emplace_back(i, i + 1);
  return Graph::make(n, std::move(e));
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; i++) e.emplace_back(i, i + 1);
  if (n > 2) e.emplace_back(0, n - 1);
  return Graph::make(n, std::move(e));
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) e.emplace_back(i, j);
  return Graph::make(n, std::move(e));
}

inline Graph edgeless_graph(int n) { return Graph::make(n, {}); }

}  // namespace nestcx
