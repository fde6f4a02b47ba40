#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace dbis {

class ReductionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

// Peels vertices of degree < d from the alive set until none remain.
inline void peel_to_core(const Graph& g, std::vector<char>& alive, std::size_t d) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n, 0);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (Vertex w : g.neighbors(v)) deg[v] += alive[w] ? 1 : 0;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v] && deg[v] < d) {
      alive[v] = 0;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (alive[w] && --deg[w] < d) {
        alive[w] = 0;
        stack.push_back(w);
      }
    }
  }
}

inline VertexSet mask_to_set(const std::vector<char>& mask) {
  VertexSet out;
  for (Vertex v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.push_back(v);
  }
  return out;
}

}  // namespace detail

/// Vertex set of the d-core: the largest induced subgraph with minimum degree
/// at least d. May be empty.
inline VertexSet d_core(const Graph& g, std::size_t d) {
  std::vector<char> alive(g.num_vertices(), 1);
  detail::peel_to_core(g, alive, d);
  return detail::mask_to_set(alive);
}

/// An inclusion-minimal induced subgraph with minimum degree >= d.
///
/// Starting from the d-core, vertices are tried in `scan_order` (ascending id
/// when omitted). Deleting v is committed when the d-core of the remainder is
/// nonempty, and the remainder is replaced by that core. A vertex whose
/// deletion empties the core can never be deleted later (cores are monotone
/// under taking subgraphs), so a single pass reaches the same fixpoint as
/// restarting the scan after every commit.
///
/// The result H is d-degenerate: every proper induced subgraph of H has a
/// vertex of degree < d, and H itself has minimum degree exactly d.
inline InducedSubgraph minimal_min_degree_subgraph(
    const Graph& g, std::size_t d, std::optional<std::vector<Vertex>> scan_order = std::nullopt) {
  const std::size_t n = g.num_vertices();
  std::vector<char> alive(n, 1);
  detail::peel_to_core(g, alive, d);
  if (std::find(alive.begin(), alive.end(), 1) == alive.end()) {
    throw ReductionError("the " + std::to_string(d) +
                         "-core is empty: the input has no induced subgraph of minimum degree >= " +
                         std::to_string(d));
  }

  std::vector<Vertex> order;
  if (scan_order) {
    order = std::move(*scan_order);
    auto check = order;
    std::sort(check.begin(), check.end());
    std::vector<Vertex> identity(n);
    std::iota(identity.begin(), identity.end(), Vertex{0});
    if (check != identity) throw ReductionError("scan order is not a permutation of the vertices");
  } else {
    order.resize(n);
    std::iota(order.begin(), order.end(), Vertex{0});
  }

  std::vector<char> trial;
  for (Vertex v : order) {
    if (!alive[v]) continue;
    trial = alive;
    trial[v] = 0;
    detail::peel_to_core(g, trial, d);
    if (std::find(trial.begin(), trial.end(), 1) != trial.end()) alive.swap(trial);
  }
  return induced_subgraph(g, detail::mask_to_set(alive));
}

struct DegeneracyOrdering {
  // order[position] = vertex, left to right.
  std::vector<Vertex> order;
  std::size_t degeneracy = 0;
};

/// Smallest-last ordering: repeatedly remove a minimum-degree vertex (ties to
/// the smallest id) and reverse the removal sequence. Each vertex's
/// left-degree is its degree at removal time.
inline DegeneracyOrdering degeneracy_ordering(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<char> removed(n, 0);
  DegeneracyOrdering result;
  result.order.reserve(n);
  while (!queue.empty()) {
    const auto [k, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    result.order.push_back(v);
    result.degeneracy = std::max(result.degeneracy, k);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  std::reverse(result.order.begin(), result.order.end());
  return result;
}

/// A graph with a left-to-right ordering in which every vertex has at most d
/// left-neighbors, plus a fixed candidate set N_v of exactly d neighbors per
/// vertex.
struct OrderedGraph {
  Graph graph;
  std::size_t d = 0;
  std::vector<Vertex> order;
  std::vector<std::size_t> position;
  std::vector<std::vector<Vertex>> left_neighbors;
  std::vector<std::vector<Vertex>> candidate_sets;

  std::size_t max_left_degree() const {
    std::size_t best = 0;
    for (const auto& l : left_neighbors) best = std::max(best, l.size());
    return best;
  }
};

/// Requires min degree >= d and degeneracy <= d. N_v is the d smallest
/// neighbor ids of v.
inline OrderedGraph build_ordered(const Graph& g, std::size_t d) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw ReductionError("cannot order an empty graph");
  if (const auto delta = min_degree(g); delta < d) {
    throw ReductionError("minimum degree " + std::to_string(delta) + " is below d = " + std::to_string(d));
  }
  auto ordering = degeneracy_ordering(g);
  if (ordering.degeneracy > d) {
    throw ReductionError("degeneracy " + std::to_string(ordering.degeneracy) + " exceeds d = " +
                         std::to_string(d) + "; reduce the graph first");
  }

  OrderedGraph og;
  og.graph = g;
  og.d = d;
  og.order = std::move(ordering.order);
  og.position.assign(n, 0);
  for (std::size_t pos = 0; pos < n; ++pos) og.position[og.order[pos]] = pos;
  og.left_neighbors.resize(n);
  og.candidate_sets.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    for (Vertex w : nb) {
      if (og.position[w] < og.position[v]) og.left_neighbors[v].push_back(w);
    }
    og.candidate_sets[v].assign(nb.begin(), nb.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return og;
}

/// Reduced instance ready for extraction, with ids mapped back to the input.
struct PreparedInstance {
  OrderedGraph ordered;
  // original[reduced_id] = input id.
  std::vector<Vertex> original;
};

inline PreparedInstance prepare(const Graph& g, std::size_t d,
                                std::optional<std::vector<Vertex>> scan_order = std::nullopt) {
  auto reduced = minimal_min_degree_subgraph(g, d, std::move(scan_order));
  return {build_ordered(reduced.graph, d), std::move(reduced.original)};
}

}  // namespace dbis
