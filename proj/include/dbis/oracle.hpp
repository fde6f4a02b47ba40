#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace dbis {

// Exhaustive baselines for small graphs.

inline constexpr std::size_t kOracleDefaultCap = 18;

class OracleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OracleResult {
  Rational best_value;
  VertexSet witness_I;
  VertexSet witness_J;
};

namespace detail {

inline void require_cap(const Graph& g, std::size_t cap) {
  if (cap > 30) throw OracleError("oracle cap above 30 vertices is not supported");
  if (g.num_vertices() > cap) {
    throw OracleError("oracle is limited to " + std::to_string(cap) + " vertices (graph has " +
                      std::to_string(g.num_vertices()) + ")");
  }
}

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> masks(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex w : g.neighbors(v)) masks[v] |= std::uint32_t{1} << w;
  }
  return masks;
}

// BFS 2-coloring of G[subset]; the smallest vertex of each component gets
// color 0. Returns false if G[subset] has an odd cycle.
inline bool two_color(const std::vector<std::uint32_t>& adj, std::uint32_t subset, std::uint32_t& color0,
                      std::uint32_t& color1) {
  color0 = color1 = 0;
  std::uint32_t unseen = subset;
  Vertex queue[32];
  while (unseen) {
    const auto root = static_cast<Vertex>(std::countr_zero(unseen));
    unseen &= ~(std::uint32_t{1} << root);
    color0 |= std::uint32_t{1} << root;
    std::size_t head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const Vertex v = queue[head++];
      const bool v_is_0 = (color0 >> v) & 1;
      const std::uint32_t nb = adj[v] & subset;
      if (nb & (v_is_0 ? color0 : color1)) return false;
      std::uint32_t fresh = nb & unseen;
      unseen &= ~fresh;
      (v_is_0 ? color1 : color0) |= fresh;
      while (fresh) {
        queue[tail++] = static_cast<Vertex>(std::countr_zero(fresh));
        fresh &= fresh - 1;
      }
    }
  }
  return true;
}

inline VertexSet mask_vertices(std::uint32_t mask) {
  VertexSet out;
  while (mask) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace detail

/// Maximum average degree 2 e(S) / |S| over vertex sets S with G[S]
/// bipartite. Ties go to the smaller |S|, then the smaller bitmask. The empty
/// set has value 0.
inline OracleResult max_induced_bipartite_average_degree(const Graph& g, std::size_t cap = kOracleDefaultCap) {
  detail::require_cap(g, cap);
  const auto n = static_cast<unsigned>(g.num_vertices());
  const auto adj = detail::adjacency_masks(g);

  // best value as a fraction best_num / best_den; empty set: 0/1.
  std::uint64_t best_num = 0, best_den = 1;
  std::uint32_t best_mask = 0, best_c0 = 0, best_c1 = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t s = 1; s < total; ++s) {
    const auto subset = static_cast<std::uint32_t>(s);
    std::uint32_t c0 = 0, c1 = 0;
    if (!detail::two_color(adj, subset, c0, c1)) continue;
    std::uint64_t edges = 0;
    for (std::uint32_t rest = c0; rest; rest &= rest - 1) {
      edges += std::popcount(adj[std::countr_zero(rest)] & c1);
    }
    const std::uint64_t num = 2 * edges;
    const std::uint64_t den = std::popcount(subset);
    const std::uint64_t lhs = num * best_den, rhs = best_num * den;
    const bool better = lhs > rhs || (lhs == rhs && den < best_den);
    if (better) {
      best_num = num;
      best_den = den;
      best_mask = subset;
      best_c0 = c0;
      best_c1 = c1;
    }
  }
  if (best_mask == 0) best_den = 1;
  return {Rational(BigInt(best_num), BigInt(best_den)), detail::mask_vertices(best_c0),
          detail::mask_vertices(best_c1)};
}

/// A maximum independent set; among maximum ones, the lexicographically
/// smallest sorted id list.
inline VertexSet max_independent_set(const Graph& g, std::size_t cap = kOracleDefaultCap) {
  detail::require_cap(g, cap);
  const auto n = static_cast<unsigned>(g.num_vertices());
  const auto adj = detail::adjacency_masks(g);
  VertexSet best;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < total; ++s) {
    const auto subset = static_cast<std::uint32_t>(s);
    const auto size = static_cast<std::size_t>(std::popcount(subset));
    if (size < best.size()) continue;
    bool independent = true;
    for (std::uint32_t rest = subset; rest && independent; rest &= rest - 1) {
      independent = (adj[std::countr_zero(rest)] & subset) == 0;
    }
    if (!independent) continue;
    auto vs = detail::mask_vertices(subset);
    if (size > best.size() || vs < best) best = std::move(vs);
  }
  return best;
}

}  // namespace dbis
