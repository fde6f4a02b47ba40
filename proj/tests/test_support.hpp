#pragma once

// Named graphs, seeded corpora and brute-force reference implementations.
// The references are deliberately naive and share no code with the library
// routines they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "dbis/dbis.hpp"

namespace dbis::testing {

inline Graph make_graph(std::size_t n, std::vector<Edge> edges) { return Graph::from_edge_list(n, edges); }

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(Vertex(i), Vertex((i + 1) % n));
  return make_graph(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(Vertex(i), Vertex(i + 1));
  return make_graph(n, e);
}

inline Graph empty_graph(std::size_t n) { return make_graph(n, {}); }

inline Graph k3() { return make_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return make_graph(10, e);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  const auto shift = static_cast<Vertex>(a.num_vertices());
  for (auto [u, v] : b.edges()) e.emplace_back(u + shift, v + shift);
  return make_graph(a.num_vertices() + b.num_vertices(), e);
}

/// G(n, rho) without scrubbing; may contain triangles.
inline Graph random_graph(std::size_t n, double rho, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(rho)) e.emplace_back(u, v);
    }
  }
  return make_graph(n, e);
}

/// Seeded corpus of small graphs with mixed sizes and densities.
inline std::vector<Graph> corpus(std::size_t count, std::size_t max_n, std::uint64_t seed, bool triangle_free = false) {
  SplitMix64 rng(seed);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng.below(max_n);
    const double rho = 0.05 + 0.9 * rng.uniform();
    const std::uint64_t s = rng();
    out.push_back(triangle_free ? binomial_triangle_scrubbed(n, rho, s) : random_graph(n, rho, s));
  }
  return out;
}

// ---- brute-force references ------------------------------------------------

inline bool naive_has_edge(const Graph& g, Vertex u, Vertex v) {
  for (Vertex w : g.neighbors(u)) {
    if (w == v) return true;
  }
  return false;
}

inline bool naive_triangle_free(const Graph& g) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (naive_has_edge(g, a, b) && naive_has_edge(g, b, c) && naive_has_edge(g, a, c)) return false;
  return true;
}

inline std::size_t naive_edges_within(const Graph& g, const std::vector<Vertex>& s) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) count += naive_has_edge(g, s[i], s[j]) ? 1 : 0;
  return count;
}

/// min over all orderings of the max left-degree.
inline std::size_t brute_degeneracy(const Graph& g) {
  std::vector<Vertex> perm(g.num_vertices());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::size_t best = g.num_vertices();
  do {
    std::size_t worst = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      std::size_t left = 0;
      for (std::size_t j = 0; j < i; ++j) left += naive_has_edge(g, perm[i], perm[j]) ? 1 : 0;
      worst = std::max(worst, left);
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return g.num_vertices() == 0 ? 0 : best;
}

/// Vertex set of the d-core by repeated full rescans.
inline std::vector<Vertex> naive_core(const Graph& g, std::vector<char> alive, std::size_t d) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (!alive[v]) continue;
      std::size_t deg = 0;
      for (Vertex w : g.neighbors(v)) deg += alive[w] ? 1 : 0;
      if (deg < d) {
        alive[v] = 0;
        changed = true;
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (alive[v]) out.push_back(v);
  return out;
}

/// The minimality procedure exactly as stated: scan ascending ids, commit a
/// deletion when the core of the remainder is nonempty, and restart the scan
/// after every commit.
inline std::vector<Vertex> naive_minimal(const Graph& g, std::size_t d) {
  std::vector<char> alive(g.num_vertices(), 0);
  for (Vertex v : naive_core(g, std::vector<char>(g.num_vertices(), 1), d)) alive[v] = 1;
  bool restarted = true;
  while (restarted) {
    restarted = false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (!alive[v]) continue;
      auto trial = alive;
      trial[v] = 0;
      auto core = naive_core(g, trial, d);
      if (!core.empty()) {
        std::fill(alive.begin(), alive.end(), 0);
        for (Vertex w : core) alive[w] = 1;
        restarted = true;
        break;
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (alive[v]) out.push_back(v);
  return out;
}

/// Size of a maximum independent set by plain subset enumeration.
inline std::size_t brute_independence_number(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    if (s.size() > best && naive_edges_within(g, s) == 0) best = s.size();
  }
  return best;
}

/// Best 2 e(S)/|S| over S with G[S] bipartite, testing bipartiteness by
/// trying every 2-coloring of S.
inline Rational brute_bipartite_density(const Graph& g) {
  const std::size_t n = g.num_vertices();
  Rational best(0);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    bool bipartite = false;
    for (std::uint64_t color = 0; color < (std::uint64_t{1} << s.size()) && !bipartite; ++color) {
      bool ok = true;
      for (std::size_t i = 0; i < s.size() && ok; ++i)
        for (std::size_t j = i + 1; j < s.size() && ok; ++j)
          if ((color >> i & 1) == (color >> j & 1) && naive_has_edge(g, s[i], s[j])) ok = false;
      bipartite = ok;
    }
    if (!bipartite) continue;
    Rational value(BigInt(2 * naive_edges_within(g, s)), BigInt(s.size()));
    if (value > best) best = value;
  }
  return best;
}

}  // namespace dbis::testing
