// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances, instance sizes, trial counts and runtime
// limits are fixed here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dbis/json_report.hpp"
#include "test_support.hpp"

namespace {

using namespace dbis;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0 = no limit
  std::function<Outcome()> run;
};

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

Outcome q_bound_sweep() {
  const auto ds = log_spaced(16, 1000000, 50);
  double worst = 1e300;
  std::size_t worst_d = 0;
  bool all = ds.size() == 50;
  for (std::size_t d : ds) {
    const auto c = check_q_bound(d);
    all = all && c.passed;
    if (c.ratio < worst) {
      worst = c.ratio;
      worst_d = d;
    }
  }
  return {all, std::to_string(ds.size()) + " values of d, min q/p = " + fmt(worst) + " at d=" +
                   std::to_string(worst_d) + " (need >= 0.35)"};
}

Outcome end_to_end_guarantee() {
  const auto g = complete_bipartite(200, 200);
  const auto params = derive_params(200, true);
  if (params.ell != 3 || params.y_prime_threshold != 1) return {false, "unexpected params"};
  const auto r = extract_from_graph(g, params, {7, 1000, 1});
  std::vector<char> in_i(g.num_vertices(), 0);
  for (Vertex v : r.I) in_i[v] = 1;
  bool every_j_hit = true;
  for (Vertex y : r.J) {
    std::size_t hits = 0;
    for (Vertex w : g.neighbors(y)) hits += in_i[w];
    every_j_hit = every_j_hit && hits >= 1;
  }
  const bool disjoint_independent = r.report.valid && is_independent(g, r.I) && is_independent(g, r.J);
  const bool size_bound = r.I.size() <= 230 * r.J.size();
  const bool degree_bound = r.report.average_degree >= make_rational(3, 2310);
  return {disjoint_independent && every_j_hit && size_bound && degree_bound && !r.I.empty() && !r.J.empty(),
          "|I|=" + std::to_string(r.I.size()) + " |J|=" + std::to_string(r.J.size()) + " trials=" +
              std::to_string(r.trials_used) + " avg=" + to_string(r.report.average_degree) + " >= 3/2310"};
}

Outcome oracle_dominance() {
  constexpr std::size_t d = 2;
  const auto params = derive_params(d, false);
  SplitMix64 rng(20240601);
  std::size_t graphs = 0, successes = 0, dominated = 0;
  while (graphs < 50) {
    const std::size_t n = 5 + rng.below(10);  // 5..14
    const double rho = 0.25 + 0.5 * rng.uniform();
    const auto g = binomial_triangle_scrubbed(n, rho, rng());
    if (d_core(g, d).empty()) continue;
    ++graphs;
    const auto best = max_induced_bipartite_average_degree(g).best_value;
    try {
      const auto r = extract_from_graph(g, params, {graphs, 1000, 1});
      ++successes;
      if (r.report.valid && r.report.average_degree <= best) ++dominated;
    } catch (const ExtractionError&) {
    }
  }
  return {successes > 0 && dominated == successes,
          std::to_string(dominated) + "/" + std::to_string(successes) + " successful runs dominated (" +
              std::to_string(graphs) + " graphs)"};
}

Outcome conditional_probability() {
  const auto og = build_ordered(complete_bipartite(64, 64), 64);
  const auto params = derive_params(64, true);
  const auto est = mc_conditional(og, params, 0, 10000, 1);
  return {est.probability.mean > 0.2 && est.probability.ci_low > 0.2,
          "P(y in Y'|y in Y) = " + fmt(est.probability.mean) + ", 95% CI [" + fmt(est.probability.ci_low) + ", " +
              fmt(est.probability.ci_high) + "] vs 0.2"};
}

Outcome edge_identity() {
  const auto og = build_ordered(complete_bipartite(32, 32), 32);
  const auto params = derive_params(32, true);
  const auto est = mc_edge_identity(og, params, 10000, 1);
  return {est.ci_low <= est.target && est.target <= est.ci_high,
          "mean e(Y) = " + fmt(est.mean) + ", 95% CI [" + fmt(est.ci_low) + ", " + fmt(est.ci_high) +
              "], q^2 e(G) = " + fmt(est.target)};
}

Outcome potential_positivity() {
  const auto og = build_ordered(complete_bipartite(200, 200), 200);
  const auto params = derive_params(200, true);
  const auto est = mc_potential(og, params, 1000, 1);
  return {est.mean.mean > 0 && est.mean.ci_low > 0 && est.success.mean > 0,
          "mean potential = " + fmt(est.mean.mean) + ", 95% CI [" + fmt(est.mean.ci_low) + ", " +
              fmt(est.mean.ci_high) + "], P(potential > 0) = " + fmt(est.success.mean)};
}

Outcome degeneracy_correctness() {
  const auto graphs = testing::corpus(200, 8, 7001);
  std::size_t mismatches = 0, minimal_checked = 0, minimal_bad = 0;
  for (const auto& g : graphs) {
    if (degeneracy_ordering(g).degeneracy != testing::brute_degeneracy(g)) ++mismatches;
    for (std::size_t d = 1; d <= g.num_vertices(); ++d) {
      if (d_core(g, d).empty()) break;
      const auto h = minimal_min_degree_subgraph(g, d);
      ++minimal_checked;
      if (min_degree(h.graph) < d || degeneracy_ordering(h.graph).degeneracy > d) ++minimal_bad;
    }
  }
  return {mismatches == 0 && minimal_bad == 0 && minimal_checked > 0,
          std::to_string(graphs.size()) + " graphs, " + std::to_string(mismatches) + " degeneracy mismatches; " +
              std::to_string(minimal_checked) + " reductions, " + std::to_string(minimal_bad) + " violations"};
}

Outcome turan_bound() {
  const auto graphs = testing::corpus(500, 50, 8008);
  std::size_t violations = 0;
  for (const auto& g : graphs) {
    const auto s = greedy_independent_set(g);
    const Rational lhs = Rational(BigInt(s.size())) * (average_degree(g) + 1);
    if (lhs < Rational(BigInt(g.num_vertices())) || !is_independent(g, s)) ++violations;
  }
  return {violations == 0, std::to_string(graphs.size()) + " graphs, " + std::to_string(violations) + " violations"};
}

Outcome determinism() {
  const auto g = complete_bipartite(200, 200);
  const auto params = derive_params(200, true);
  std::vector<std::string> dumps;
  for (unsigned workers : {1u, 4u, 8u}) {
    const auto r = extract_from_graph(g, params, {7, 1000, workers});
    dumps.push_back(to_json(r, graph_hash(g)).dump(2));
  }
  const bool same = dumps[0] == dumps[1] && dumps[1] == dumps[2];
  return {same, same ? "identical JSON (" + std::to_string(dumps[0].size()) + " bytes) for 1, 4, 8 workers"
                     : "JSON differs across worker counts"};
}

Outcome survival_bound() {
  double worst = 1.0;
  std::size_t worst_d = 0;
  const auto ds = log_spaced(12, 1000000, 200);
  for (std::size_t d : ds) {
    const double s = survival_closed_form(d);
    if (s < worst) {
      worst = s;
      worst_d = d;
    }
  }
  const auto og = build_ordered(complete_bipartite(32, 32), 32);
  const auto params = derive_params(32, true);
  Vertex x = 0;
  for (Vertex v = 0; v < og.graph.num_vertices(); ++v)
    if (og.left_neighbors[v].size() == 32) x = v;
  if (og.left_neighbors[x].size() != 32) return {false, "no vertex with 32 left-neighbors"};
  const auto est = mc_per_vertex_survival(og, params, x, 10000, 1);
  const bool contains = est.estimate.ci_low <= est.closed_form && est.closed_form <= est.estimate.ci_high;
  return {worst >= 0.35 && contains,
          "min (1-1/d)^d = " + fmt(worst) + " at d=" + std::to_string(worst_d) + " over " +
              std::to_string(ds.size()) + " values; MC " + fmt(est.estimate.mean) + " CI [" +
              fmt(est.estimate.ci_low) + ", " + fmt(est.estimate.ci_high) + "] vs " + fmt(est.closed_form)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "q >= 0.35p sweep", 5, q_bound_sweep},
      {2, "end-to-end guarantee on K_{200,200}", 10, end_to_end_guarantee},
      {3, "oracle dominance on small graphs", 60, oracle_dominance},
      {4, "conditional probability > 1/5", 30, conditional_probability},
      {5, "E[e(Y)] = q^2 e(G)", 30, edge_identity},
      {6, "potential has positive mean", 0, potential_positivity},
      {7, "degeneracy ordering and reduction", 0, degeneracy_correctness},
      {8, "Turan greedy bound", 0, turan_bound},
      {9, "determinism across worker counts", 0, determinism},
      {10, "survival bound (1-1/d)^d >= 0.35", 0, survival_bound},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = c.time_limit_s == 0 || secs < c.time_limit_s;
    const bool ok = out.passed && in_time;
    failures += ok ? 0 : 1;
    std::printf("[%s] %2d. %s: %s (%.2fs%s)\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), out.detail.c_str(), secs,
                c.time_limit_s > 0 ? (in_time ? ", within limit" : ", OVER TIME LIMIT") : "");
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
