#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "binomial.hpp"
#include "extractor.hpp"
#include "parallel.hpp"
#include "reducer.hpp"
#include "rng.hpp"

namespace dbis {

// Monte Carlo and closed-form checks of the probabilistic facts behind the
// extraction: q >= 0.35 p, P[y in Y' | y in Y] > 1/5, survival of a sampled
// vertex, E[e(Y)] = q^2 e(G), and E[potential] > 0.
//
// Every estimator draws trial t from trial_stream(seed, t) and reduces the
// per-trial values in index order, so results depend only on (seed, trials).

class StatsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kZ95 = 1.959963984540054;

struct Estimate {
  double mean = 0.0;
  std::size_t trials = 0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double target = 0.0;
  bool passed = false;
};

/// 95% Wilson score interval for a proportion.
inline Estimate wilson_estimate(std::size_t successes, std::size_t trials) {
  Estimate e;
  e.trials = trials;
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = kZ95 * kZ95;
  const double centre = (phat + z2 / (2 * n)) / (1 + z2 / n);
  const double half = kZ95 / (1 + z2 / n) * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n));
  e.mean = phat;
  e.ci_low = std::clamp(std::min(centre - half, phat), 0.0, 1.0);
  e.ci_high = std::clamp(std::max(centre + half, phat), 0.0, 1.0);
  return e;
}

/// Normal-approximation 95% interval for the mean of per-trial values,
/// summed in index order.
inline Estimate mean_estimate(const std::vector<double>& values) {
  Estimate e;
  e.trials = values.size();
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  e.mean = sum / n;
  double ss = 0.0;
  for (double v : values) ss += (v - e.mean) * (v - e.mean);
  const double var = values.size() > 1 ? ss / (n - 1) : 0.0;
  const double half = kZ95 * std::sqrt(var / n);
  e.ci_low = e.mean - half;
  e.ci_high = e.mean + half;
  return e;
}

namespace detail {

inline void require_trials(std::size_t trials) {
  if (trials == 0) throw StatsError("trials must be positive");
}

inline void require_vertex(const OrderedGraph& og, Vertex v) {
  if (v >= og.graph.num_vertices()) throw StatsError("vertex " + std::to_string(v) + " is out of range");
}

}  // namespace detail

struct QBoundCheck {
  std::size_t d = 0;
  std::size_t ell = 0;
  double q = 0.0;
  double ratio = 0.0;  // q / p = q d
  bool passed = false;
};

/// q/p at ell = floor(ln d / ln ln d); passes when it is at least 0.35.
inline QBoundCheck check_q_bound(std::size_t d) {
  if (d < kGuaranteeMinD) throw StatsError("check_q_bound needs d >= 16 (got " + std::to_string(d) + ")");
  QBoundCheck c;
  c.d = d;
  c.ell = log_ratio_floor(d);
  c.q = exact_q(d, c.ell);
  c.ratio = c.q * static_cast<double>(d);
  c.passed = c.ratio >= 0.35;
  return c;
}

/// `count` integers log-spaced over [lo, hi], endpoints included, deduplicated.
inline std::vector<std::size_t> log_spaced(std::size_t lo, std::size_t hi, std::size_t count) {
  std::vector<std::size_t> out;
  if (count == 0 || lo > hi) return out;
  const double a = std::log(static_cast<double>(lo));
  const double b = std::log(static_cast<double>(hi));
  for (std::size_t i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
    auto v = static_cast<std::size_t>(std::llround(std::exp(a + t * (b - a))));
    out.push_back(std::clamp(v, lo, hi));
  }
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// X restricted to N_y is forced to L; every other vertex is sampled with
/// probability p.
struct ConditionalTrial {
  Vertex y = 0;
  VertexSet L;
  std::size_t neighbors_in_I = 0;
  std::size_t missed = 0;  // |L \ I|
  bool in_y_prime = false;
};

namespace detail {

inline ConditionalTrial run_conditional(const OrderedGraph& og, const Params& params, Vertex y, VertexSet L,
                                        SplitMix64& rng) {
  const std::size_t n = og.graph.num_vertices();
  std::vector<char> on_candidate(n, 0);
  for (Vertex w : og.candidate_sets[y]) on_candidate[w] = 1;
  std::vector<char> in_x(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!on_candidate[v]) in_x[v] = rng.one_in(params.d) ? 1 : 0;
  }
  for (Vertex v : L) in_x[v] = 1;

  std::vector<char> in_i(n, 0);
  for (Vertex v : survivors(og, in_x)) in_i[v] = 1;

  ConditionalTrial trial;
  trial.y = y;
  for (Vertex w : og.graph.neighbors(y)) trial.neighbors_in_I += in_i[w] ? 1 : 0;
  for (Vertex v : L) trial.missed += in_i[v] ? 0 : 1;
  trial.in_y_prime = trial.neighbors_in_I >= params.y_prime_threshold;
  trial.L = std::move(L);
  return trial;
}

inline VertexSet random_subset(const std::vector<Vertex>& pool, std::size_t k, SplitMix64& rng) {
  std::vector<Vertex> work = pool;
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(work.size() - i));
    std::swap(work[i], work[j]);
  }
  work.resize(k);
  return make_vertex_set(std::move(work));
}

inline void require_conditional(const OrderedGraph& og, const Params& params, Vertex y, std::size_t trials) {
  require_trials(trials);
  check_compatible(og, params);
  require_vertex(og, y);
  if (og.graph.degree(y) < params.d) throw StatsError("vertex " + std::to_string(y) + " has degree below d");
  if (params.ell > params.d) throw StatsError("ell exceeds d");
}

}  // namespace detail

struct ConditionalEstimate {
  // P[y in Y' | y in Y]; passes when the CI lies above 1/5.
  Estimate probability;
  // E|L \ I| with its interval; the analysis bounds it by 0.65 ell.
  Estimate missed;
  // P[|L \ I| >= 0.9 ell]; Markov bounds it by 0.65 / 0.9 < 0.8.
  Estimate markov_tail;
};

namespace detail {

inline ConditionalEstimate summarize_conditional(const std::vector<ConditionalTrial>& runs, const Params& params) {
  std::size_t hits = 0, tail = 0;
  std::vector<double> missed;
  missed.reserve(runs.size());
  for (const auto& r : runs) {
    hits += r.in_y_prime ? 1 : 0;
    // |L \ I| >= 0.9 ell  <=>  10 |L \ I| >= 9 ell
    tail += 10 * r.missed >= 9 * params.ell ? 1 : 0;
    missed.push_back(static_cast<double>(r.missed));
  }
  ConditionalEstimate out;
  out.probability = wilson_estimate(hits, runs.size());
  out.probability.target = 0.2;
  out.probability.passed = out.probability.ci_low > 0.2;
  out.missed = mean_estimate(missed);
  out.missed.target = 0.65 * static_cast<double>(params.ell);
  out.missed.passed = out.missed.ci_low <= out.missed.target;
  out.markov_tail = wilson_estimate(tail, runs.size());
  out.markov_tail.target = 0.8;
  out.markov_tail.passed = out.markov_tail.ci_high < 0.8;
  return out;
}

}  // namespace detail

/// Estimates P[y in Y' | y in Y] with L drawn uniformly from the ell-subsets
/// of N_y in each trial.
inline ConditionalEstimate mc_conditional(const OrderedGraph& og, const Params& params, Vertex y, std::size_t trials,
                                          std::uint64_t seed, unsigned workers = 1) {
  detail::require_conditional(og, params, y, trials);
  std::vector<ConditionalTrial> runs(trials);
  parallel_for(0, trials, workers, [&](std::size_t t) {
    auto rng = trial_stream(seed, t);
    auto L = detail::random_subset(og.candidate_sets[y], params.ell, rng);
    runs[t] = detail::run_conditional(og, params, y, std::move(L), rng);
  });
  return detail::summarize_conditional(runs, params);
}

/// Same estimate for one fixed L.
inline ConditionalEstimate mc_conditional_fixed(const OrderedGraph& og, const Params& params, Vertex y,
                                                const VertexSet& L, std::size_t trials, std::uint64_t seed,
                                                unsigned workers = 1) {
  detail::require_conditional(og, params, y, trials);
  const auto& candidates = og.candidate_sets[y];
  if (L.size() != params.ell) throw StatsError("L must have exactly ell vertices");
  for (Vertex v : L) {
    if (std::find(candidates.begin(), candidates.end(), v) == candidates.end()) {
      throw StatsError("L must be a subset of N_y");
    }
  }
  std::vector<ConditionalTrial> runs(trials);
  parallel_for(0, trials, workers, [&](std::size_t t) {
    auto rng = trial_stream(seed, t);
    runs[t] = detail::run_conditional(og, params, y, L, rng);
  });
  return detail::summarize_conditional(runs, params);
}

struct WorstCaseConditional {
  VertexSet worst_L;
  ConditionalEstimate estimate;
  std::size_t subsets = 0;
};

/// Runs mc_conditional_fixed for every ell-subset L of N_y and keeps the one
/// with the smallest estimated probability. Limited to `max_subsets` subsets.
inline WorstCaseConditional worst_case_conditional(const OrderedGraph& og, const Params& params, Vertex y,
                                                   std::size_t trials, std::uint64_t seed,
                                                   std::size_t max_subsets = 5000, unsigned workers = 1) {
  detail::require_conditional(og, params, y, trials);
  const auto& pool = og.candidate_sets[y];
  const std::size_t k = params.ell;
  // C(d, ell) with early exit.
  double count = 1.0;
  for (std::size_t i = 0; i < k; ++i) count = count * static_cast<double>(pool.size() - i) / static_cast<double>(i + 1);
  if (count > static_cast<double>(max_subsets)) {
    throw StatsError("C(d, ell) = " + std::to_string(static_cast<long long>(count)) + " subsets exceeds the cap");
  }

  WorstCaseConditional out;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (;;) {
    VertexSet L;
    for (auto i : idx) L.push_back(pool[i]);
    L = make_vertex_set(std::move(L));
    auto est = mc_conditional_fixed(og, params, y, L, trials, seed, workers);
    if (out.subsets == 0 || est.probability.mean < out.estimate.probability.mean) {
      out.worst_L = L;
      out.estimate = est;
    }
    ++out.subsets;
    // next combination
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

struct SurvivalEstimate {
  // P[x in I | x in X]; target (1 - p)^d, passes unless the CI lies below it.
  Estimate estimate;
  // Exact probability (1 - p)^{left-degree of x}.
  double closed_form = 0.0;
  std::size_t left_degree = 0;
};

/// Only x's left-neighbors affect whether a sampled x survives, so each trial
/// samples just those.
inline SurvivalEstimate mc_per_vertex_survival(const OrderedGraph& og, const Params& params, Vertex x,
                                               std::size_t trials, std::uint64_t seed, unsigned workers = 1) {
  detail::require_trials(trials);
  detail::check_compatible(og, params);
  detail::require_vertex(og, x);
  const auto& left = og.left_neighbors[x];
  std::vector<char> survived(trials, 0);
  parallel_for(0, trials, workers, [&](std::size_t t) {
    auto rng = trial_stream(seed, t);
    bool alive = true;
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (rng.one_in(params.d)) alive = false;
    }
    survived[t] = alive ? 1 : 0;
  });
  const auto hits = static_cast<std::size_t>(std::count(survived.begin(), survived.end(), 1));
  SurvivalEstimate out;
  out.left_degree = left.size();
  out.closed_form = std::pow(1.0 - 1.0 / static_cast<double>(params.d), static_cast<double>(left.size()));
  out.estimate = wilson_estimate(hits, trials);
  out.estimate.target = survival_closed_form(params.d);
  out.estimate.passed = out.estimate.ci_high >= out.estimate.target;
  return out;
}

/// Mean of e(Y) against q^2 e(G); passes when the CI contains the target.
/// Requires a triangle-free graph, where Y-membership of adjacent vertices is
/// independent.
inline Estimate mc_edge_identity(const OrderedGraph& og, const Params& params, std::size_t trials,
                                 std::uint64_t seed, unsigned workers = 1) {
  detail::require_trials(trials);
  if (og.d != params.d) throw StatsError("ordered graph and params disagree on d");
  if (!is_triangle_free(og.graph)) throw StatsError("edge identity requires a triangle-free graph");
  const Graph& g = og.graph;
  const std::size_t n = g.num_vertices();
  std::vector<double> e_y(trials, 0.0);
  parallel_for(0, trials, workers, [&](std::size_t t) {
    auto rng = trial_stream(seed, t);
    std::vector<char> in_x(n, 0);
    for (auto& bit : in_x) bit = params.d > 0 && rng.one_in(params.d) ? 1 : 0;
    std::vector<char> in_y(n, 0);
    for (Vertex y = 0; y < n; ++y) {
      std::size_t hits = 0;
      for (Vertex w : og.candidate_sets[y]) hits += in_x[w] ? 1 : 0;
      in_y[y] = hits == params.ell ? 1 : 0;
    }
    std::size_t count = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (!in_y[u]) continue;
      for (Vertex v : g.neighbors(u)) count += (u < v && in_y[v]) ? 1 : 0;
    }
    e_y[t] = static_cast<double>(count);
  });
  Estimate e = mean_estimate(e_y);
  e.target = params.q * params.q * static_cast<double>(g.num_edges());
  e.passed = e.ci_low <= e.target && e.target <= e.ci_high;
  return e;
}

struct PotentialEstimate {
  // E[potential]; passes when the CI lies above 0.
  Estimate mean;
  // P[potential > 0].
  Estimate success;
};

inline PotentialEstimate mc_potential(const OrderedGraph& og, const Params& params, std::size_t trials,
                                      std::uint64_t seed, unsigned workers = 1) {
  detail::require_trials(trials);
  detail::check_compatible(og, params);
  std::vector<double> phi(trials, 0.0);
  std::vector<char> positive(trials, 0);
  parallel_for(0, trials, workers, [&](std::size_t t) {
    auto rng = trial_stream(seed, t);
    const auto outcome = sample_trial(og, params, rng);
    phi[t] = to_double(outcome.phi);
    positive[t] = outcome.phi > 0 ? 1 : 0;
  });
  PotentialEstimate out;
  out.mean = mean_estimate(phi);
  out.mean.target = 0.0;
  out.mean.passed = out.mean.ci_low > 0.0;
  out.success = wilson_estimate(static_cast<std::size_t>(std::count(positive.begin(), positive.end(), 1)), trials);
  out.success.target = 0.0;
  out.success.passed = out.success.mean > 0.0;
  return out;
}

}  // namespace dbis
