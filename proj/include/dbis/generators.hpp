#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"

namespace dbis {

// Seeded triangle-free instance families. Random generators draw from a
// single SplitMix64 stream in a fixed pair order, so a seed pins the output.

namespace detail {

inline void require_probability(double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw GraphError("edge probability must lie in [0,1]");
}

}  // namespace detail

/// K_{a,b}: part A is 0..a-1, part B is a..a+b-1.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw GraphError("complete_bipartite needs both parts nonempty");
  std::vector<Edge> edges;
  edges.reserve(a * b);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) edges.emplace_back(Vertex(i), Vertex(a + j));
  }
  return Graph::from_edge_list(a + b, edges);
}

/// Bipartite binomial graph: each of the n1*n2 cross pairs independently with
/// probability rho. Pairs are visited row by row.
inline Graph random_bipartite(std::size_t n1, std::size_t n2, double rho, std::uint64_t seed) {
  detail::require_probability(rho);
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      if (rng.bernoulli(rho)) edges.emplace_back(Vertex(i), Vertex(n1 + j));
    }
  }
  return Graph::from_edge_list(n1 + n2, edges);
}

/// C5 with every vertex replaced by an independent set of size t and every
/// edge by a complete bipartite join. Vertex c*t + i is copy i of cycle
/// vertex c. 2t-regular, triangle-free, chromatic number 3.
inline Graph c5_blowup(std::size_t t) {
  if (t == 0) throw GraphError("c5_blowup needs t >= 1");
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < 5; ++c) {
    const std::size_t next = (c + 1) % 5;
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t; ++j) edges.emplace_back(Vertex(c * t + i), Vertex(next * t + j));
    }
  }
  return Graph::from_edge_list(5 * t, edges);
}

/// G(n, rho) made triangle-free: while a triangle remains, delete the
/// smallest edge of the lexicographically smallest triangle.
inline Graph binomial_triangle_scrubbed(std::size_t n, double rho, std::uint64_t seed) {
  detail::require_probability(rho);
  SplitMix64 rng(seed);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.bernoulli(rho)) adj[u][v] = adj[v][u] = 1;
    }
  }
  // Deleting edges never creates triangles, so one lexicographic sweep over
  // (a, b) visits the smallest remaining triangle's prefix each time.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!adj[a][b]) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (adj[a][c] && adj[b][c]) {
          adj[a][b] = adj[b][a] = 0;
          break;
        }
      }
    }
  }
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (adj[u][v]) edges.emplace_back(Vertex(u), Vertex(v));
    }
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace dbis
