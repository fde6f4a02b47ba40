#pragma once

#include <set>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace dbis {

/// Turán-style greedy independent set: take a minimum-degree vertex of what
/// remains (ties to the smallest id), then delete it with its neighbors.
/// The result has at least n / (average_degree + 1) vertices.
inline VertexSet greedy_independent_set(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::vector<char> gone(n, 0);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }

  auto remove = [&](Vertex v) {
    gone[v] = 1;
    queue.erase({deg[v], v});
  };

  VertexSet chosen;
  while (!queue.empty()) {
    const Vertex v = queue.begin()->second;
    chosen.push_back(v);
    remove(v);
    std::vector<Vertex> dropped;
    for (Vertex w : g.neighbors(v)) {
      if (!gone[w]) {
        remove(w);
        dropped.push_back(w);
      }
    }
    for (Vertex w : dropped) {
      for (Vertex x : g.neighbors(w)) {
        if (gone[x]) continue;
        queue.erase({deg[x], x});
        queue.emplace(--deg[x], x);
      }
    }
  }
  return make_vertex_set(std::move(chosen));
}

}  // namespace dbis
