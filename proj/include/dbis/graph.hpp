#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace dbis {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are sorted ascending and symmetric; there are no loops or
/// parallel edges. Every operation in the library treats a Graph as a value.
class Graph {
 public:
  Graph() = default;

  /// Builds the canonical graph. Repeated pairs (in either orientation)
  /// collapse to one edge; self-loops and ids >= n are rejected.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::vector<Vertex>> adj(n);
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n) {
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has a vertex id outside [0," + std::to_string(n) + ")");
      }
      if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    return Graph(std::move(adj));
  }

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& a = adjacency_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  /// Canonical edge list: pairs (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < num_vertices(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<std::vector<Vertex>> adj) : adjacency_(std::move(adj)) {
    std::size_t total = 0;
    for (auto& list : adjacency_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      total += list.size();
    }
    num_edges_ = total / 2;
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t num_edges_ = 0;
};

namespace detail {

// Membership mask for s; throws on ids outside the graph.
inline std::vector<char> membership(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : s) {
    if (v >= g.num_vertices()) {
      throw GraphError("vertex " + std::to_string(v) + " is not in a graph on " +
                       std::to_string(g.num_vertices()) + " vertices");
    }
    in[v] = 1;
  }
  return in;
}

inline void require_nonempty(const Graph& g, const char* what) {
  if (g.num_vertices() == 0) throw GraphError(std::string(what) + " of an empty graph");
}

}  // namespace detail

/// Sorts and deduplicates an arbitrary vertex list.
inline VertexSet make_vertex_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

inline std::size_t min_degree(const Graph& g) {
  detail::require_nonempty(g, "min_degree");
  std::size_t best = g.degree(0);
  for (Vertex v = 1; v < g.num_vertices(); ++v) best = std::min(best, g.degree(v));
  return best;
}

inline std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) best = std::max(best, g.degree(v));
  return best;
}

/// 2m/n, exact.
inline Rational average_degree(const Graph& g) {
  detail::require_nonempty(g, "average_degree");
  return Rational(BigInt(2 * g.num_edges()), BigInt(g.num_vertices()));
}

/// Intersects sorted neighbor lists across every edge u < v.
inline bool is_triangle_free(const Graph& g) {
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    const auto nu = g.neighbors(u);
    for (Vertex v : nu) {
      if (v <= u) continue;
      const auto nv = g.neighbors(v);
      auto a = nu.begin();
      auto b = nv.begin();
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          return false;
        }
      }
    }
  }
  return true;
}

struct InducedSubgraph {
  Graph graph;
  // original[new_id] = old_id, ascending.
  std::vector<Vertex> original;
};

/// G[s], relabelled densely in ascending order of the original ids.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  const auto in = detail::membership(g, s);
  std::vector<Vertex> original;
  std::vector<Vertex> new_id(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) {
      new_id[v] = static_cast<Vertex>(original.size());
      original.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (Vertex u : original) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && in[v]) edges.emplace_back(new_id[u], new_id[v]);
    }
  }
  return {Graph::from_edge_list(original.size(), edges), std::move(original)};
}

/// e(s): edges with both endpoints in s.
inline std::size_t edges_within(const Graph& g, std::span<const Vertex> s) {
  const auto in = detail::membership(g, s);
  std::size_t count = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (!in[u]) continue;
    for (Vertex v : g.neighbors(u)) {
      if (u < v && in[v]) ++count;
    }
  }
  return count;
}

inline bool is_independent(const Graph& g, std::span<const Vertex> s) {
  return edges_within(g, s) == 0;
}

struct BipartitePairReport {
  VertexSet I;
  VertexSet J;
  std::size_t cross_edges = 0;
  Rational average_degree;
  bool valid = false;
  std::string failure_reason;
};

/// Checks that (I, J) spans an induced bipartite subgraph and measures it.
/// Problems are reported through `valid`/`failure_reason`, never thrown.
/// The average degree of the empty pair is 0.
inline BipartitePairReport bipartite_pair_report(const Graph& g, std::span<const Vertex> I,
                                                 std::span<const Vertex> J) {
  BipartitePairReport report;
  report.I = make_vertex_set({I.begin(), I.end()});
  report.J = make_vertex_set({J.begin(), J.end()});
  const std::size_t n = g.num_vertices();
  auto out_of_range = [n](const VertexSet& s) { return !s.empty() && s.back() >= n; };
  if (out_of_range(report.I) || out_of_range(report.J)) {
    report.failure_reason = "vertex id out of range";
    return report;
  }

  std::vector<char> side(n, 0);  // 1 = I, 2 = J, 3 = both
  for (Vertex v : report.I) side[v] |= 1;
  for (Vertex v : report.J) side[v] |= 2;

  std::size_t inside_i = 0, inside_j = 0, overlap = 0, union_edges = 0;
  for (Vertex v : report.I) overlap += (side[v] == 3);
  for (Vertex u = 0; u < n; ++u) {
    if (!side[u]) continue;
    for (Vertex v : g.neighbors(u)) {
      if (v <= u || !side[v]) continue;
      ++union_edges;
      if ((side[u] & 1) && (side[v] & 1)) ++inside_i;
      if ((side[u] & 2) && (side[v] & 2)) ++inside_j;
      if (((side[u] & 1) && (side[v] & 2)) || ((side[u] & 2) && (side[v] & 1))) {
        ++report.cross_edges;
      }
    }
  }

  const std::size_t union_size = report.I.size() + report.J.size() - overlap;
  report.average_degree = union_size == 0
                              ? Rational(0)
                              : Rational(BigInt(2 * union_edges), BigInt(union_size));
  if (overlap != 0) {
    report.failure_reason = "I and J share " + std::to_string(overlap) + " vertices";
  } else if (inside_i != 0) {
    report.failure_reason = "I is not independent (" + std::to_string(inside_i) + " edges)";
  } else if (inside_j != 0) {
    report.failure_reason = "J is not independent (" + std::to_string(inside_j) + " edges)";
  } else {
    report.valid = true;
  }
  return report;
}

}  // namespace dbis
