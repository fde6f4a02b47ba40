#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "binomial.hpp"
#include "graph.hpp"
#include "greedy.hpp"
#include "parallel.hpp"
#include "rational.hpp"
#include "reducer.hpp"
#include "rng.hpp"

namespace dbis {

class ParamsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sampling constants for a given degree parameter d.
struct Params {
  std::size_t d = 0;
  std::size_t ell = 0;
  Rational p;           // exactly 1/d
  double q = 0.0;       // P[Bin(d, 1/d) = ell]
  Rational q_rational;  // the exact value of the double `q`
  std::size_t y_prime_threshold = 1;
  bool guarantee_mode = false;
};

// Smallest d for which the constant checks below are guaranteed to hold.
inline constexpr std::size_t kGuaranteeMinD = 16;

/// floor(ln d / ln ln d) for d >= 3.
inline std::size_t log_ratio_floor(std::size_t d) {
  const long double ln_d = std::log(static_cast<long double>(d));
  const long double ratio = ln_d / std::log(ln_d);
  auto k = static_cast<std::size_t>(std::floor(ratio));
  // k <= ratio  <=>  (ln d)^k <= d; nudge across rounding at the boundary.
  auto fits = [&](std::size_t j) { return static_cast<long double>(j) * std::log(ln_d) <= ln_d; };
  while (k > 0 && !fits(k)) --k;
  while (fits(k + 1)) ++k;
  return k;
}

inline bool ell_power_within_d(std::size_t ell, std::size_t d) {
  // ell^ell <= d, without overflow.
  unsigned __int128 acc = 1;
  for (std::size_t i = 0; i < ell; ++i) {
    acc *= ell;
    if (acc > d) return false;
  }
  return true;
}

/// (1 - 1/d)^d, the chance that none of d fixed vertices is sampled.
inline double survival_closed_form(std::size_t d) {
  return std::exp(static_cast<double>(d) * std::log1p(-1.0 / static_cast<double>(d)));
}

/// Derives ell, p, q and the Y' threshold.
///
/// In guarantee mode (d >= 16) the three numeric facts the analysis relies on
/// are asserted: ell^ell <= d, (1-1/d)^d >= 0.35 and q >= 0.35 p. Best-effort
/// mode accepts any d >= 2 and clamps ell into [1, d].
inline Params derive_params(std::size_t d, bool guarantee_mode) {
  if (d < 2) throw ParamsError("d must be at least 2 (got " + std::to_string(d) + ")");
  if (guarantee_mode && d < kGuaranteeMinD) {
    throw ParamsError("guarantee mode needs d >= " + std::to_string(kGuaranteeMinD) + " (got " +
                      std::to_string(d) + ")");
  }

  Params params;
  params.d = d;
  params.guarantee_mode = guarantee_mode;
  params.ell = d >= 3 ? log_ratio_floor(d) : 1;
  if (!guarantee_mode) params.ell = std::clamp<std::size_t>(params.ell, 1, d);
  params.p = Rational(BigInt(1), BigInt(d));
  params.q = exact_q(d, params.ell);
  params.q_rational = rational_from_double(params.q);
  params.y_prime_threshold = std::max<std::size_t>(1, (params.ell + 9) / 10);

  if (guarantee_mode) {
    if (!ell_power_within_d(params.ell, d)) {
      throw std::logic_error("ell^ell > d for d = " + std::to_string(d));
    }
    if (!(survival_closed_form(d) >= 0.35)) {
      throw std::logic_error("(1-1/d)^d < 0.35 for d = " + std::to_string(d));
    }
    if (params.q_rational * BigInt(d) < make_rational(35, 100)) {
      throw std::logic_error("q < 0.35 p for d = " + std::to_string(d));
    }
  }
  return params;
}

/// One realization of the random set X and everything derived from it.
struct SampleOutcome {
  VertexSet X;
  VertexSet I;
  VertexSet Y;
  VertexSet Yprime;
  std::size_t eY = 0;
  Rational phi;
};

/// |Y'| - e(Y)/(10 q d) - q |X| / (10 p), exact given the frozen rational q.
inline Rational potential(std::size_t y_prime_size, std::size_t e_y, std::size_t x_size, const Params& params) {
  const Rational& q = params.q_rational;
  const BigInt d(params.d);
  Rational phi{BigInt(y_prime_size)};
  phi -= Rational(BigInt(e_y)) / (10 * q * d);
  phi -= q * BigInt(x_size) / (10 * params.p);
  return phi;
}

inline Rational potential(const SampleOutcome& outcome, const Params& params) {
  return potential(outcome.Yprime.size(), outcome.eY, outcome.X.size(), params);
}

namespace detail {

inline void check_compatible(const OrderedGraph& og, const Params& params) {
  if (og.d != params.d) {
    throw ParamsError("ordered graph built for d = " + std::to_string(og.d) + " but params use d = " +
                      std::to_string(params.d));
  }
}

}  // namespace detail

/// I = sampled vertices with no sampled left-neighbor.
inline VertexSet survivors(const OrderedGraph& og, const std::vector<char>& in_x) {
  VertexSet I;
  for (Vertex x = 0; x < og.graph.num_vertices(); ++x) {
    if (!in_x[x]) continue;
    bool blocked = false;
    for (Vertex w : og.left_neighbors[x]) {
      if (in_x[w]) {
        blocked = true;
        break;
      }
    }
    if (!blocked) I.push_back(x);
  }
  return I;
}

/// Derives I, Y, Y', e(Y) and the potential from a fixed X (given as a mask).
inline SampleOutcome evaluate_sample(const OrderedGraph& og, const Params& params, const std::vector<char>& in_x) {
  detail::check_compatible(og, params);
  const Graph& g = og.graph;
  const std::size_t n = g.num_vertices();
  SampleOutcome out;
  for (Vertex v = 0; v < n; ++v) {
    if (in_x[v]) out.X.push_back(v);
  }
  out.I = survivors(og, in_x);
  std::vector<char> in_i(n, 0);
  for (Vertex v : out.I) in_i[v] = 1;

  for (Vertex y = 0; y < n; ++y) {
    std::size_t hits = 0;
    for (Vertex w : og.candidate_sets[y]) hits += in_x[w] ? 1 : 0;
    if (hits != params.ell) continue;
    out.Y.push_back(y);
    std::size_t in_i_count = 0;
    for (Vertex w : g.neighbors(y)) in_i_count += in_i[w] ? 1 : 0;
    if (in_i_count >= params.y_prime_threshold) out.Yprime.push_back(y);
  }
  out.eY = edges_within(g, out.Y);
  out.phi = potential(out, params);
  return out;
}

/// Default X sampler: every vertex independently with probability exactly 1/d.
struct BernoulliSampler {
  std::vector<char> operator()(const OrderedGraph& og, const Params& params, SplitMix64& rng) const {
    std::vector<char> in_x(og.graph.num_vertices(), 0);
    for (auto& bit : in_x) bit = rng.one_in(params.d) ? 1 : 0;
    return in_x;
  }
};

template <typename Sampler = BernoulliSampler>
SampleOutcome sample_trial(const OrderedGraph& og, const Params& params, SplitMix64& rng,
                           const Sampler& sampler = Sampler{}) {
  return evaluate_sample(og, params, sampler(og, params, rng));
}

struct ExtractOptions {
  std::uint64_t seed = 0;
  std::size_t max_retries = 1000;
  unsigned workers = 1;
};

struct ExtractionResult {
  VertexSet I;
  VertexSet J;
  BipartitePairReport report;
  std::size_t trials_used = 0;
  std::uint64_t seed = 0;
  Params params;
  SampleOutcome accepted;
  // |I| <= 230 |J| and average degree >= ell / 2310.
  bool size_bound_holds = false;
  bool degree_bound_holds = false;
};

class ExtractionError : public std::runtime_error {
 public:
  ExtractionError(const std::string& what, std::size_t trials) : std::runtime_error(what), trials_(trials) {}
  std::size_t trials() const { return trials_; }

 private:
  std::size_t trials_;
};

/// Samples X with per-trial streams derived from (seed, trial index) until the
/// potential is positive, then extracts J greedily from G[Y' \ I].
///
/// The accepted trial is the smallest index with positive potential, so the
/// result does not depend on `workers`.
template <typename Sampler = BernoulliSampler>
ExtractionResult extract(const OrderedGraph& og, const Params& params, const ExtractOptions& options,
                         const Sampler& sampler = Sampler{}) {
  detail::check_compatible(og, params);
  if (options.max_retries < 1) throw ParamsError("max_retries must be at least 1");

  const unsigned workers = std::max(1u, options.workers);
  const std::size_t batch = static_cast<std::size_t>(workers) * 4;
  std::optional<std::size_t> accepted_index;
  SampleOutcome accepted;
  Rational best_phi;
  bool any_trial = false;

  for (std::size_t start = 0; start < options.max_retries && !accepted_index; start += batch) {
    const std::size_t stop = std::min(options.max_retries, start + batch);
    std::vector<SampleOutcome> outcomes(stop - start);
    parallel_for(start, stop, workers, [&](std::size_t t) {
      auto rng = trial_stream(options.seed, t);
      outcomes[t - start] = sample_trial(og, params, rng, sampler);
    });
    for (std::size_t t = start; t < stop; ++t) {
      auto& outcome = outcomes[t - start];
      if (!any_trial || outcome.phi > best_phi) best_phi = outcome.phi;
      any_trial = true;
      if (outcome.phi > 0) {
        accepted_index = t;
        accepted = std::move(outcome);
        break;
      }
    }
  }

  if (!accepted_index) {
    std::ostringstream msg;
    msg << "no trial with positive potential in " << options.max_retries << " attempts (best potential "
        << to_double(best_phi) << ")";
    throw ExtractionError(msg.str(), options.max_retries);
  }

  const std::size_t trials = *accepted_index + 1;
  const Graph& g = og.graph;
  std::vector<char> in_i(g.num_vertices(), 0);
  for (Vertex v : accepted.I) in_i[v] = 1;
  VertexSet pool;
  for (Vertex y : accepted.Yprime) {
    if (!in_i[y]) pool.push_back(y);
  }
  auto sub = induced_subgraph(g, pool);
  VertexSet J;
  for (Vertex local : greedy_independent_set(sub.graph)) J.push_back(sub.original[local]);

  ExtractionResult result;
  result.I = accepted.I;
  result.J = std::move(J);
  result.trials_used = trials;
  result.seed = options.seed;
  result.params = params;
  result.report = bipartite_pair_report(g, result.I, result.J);

  std::ostringstream diag;
  diag << "trial " << *accepted_index << ": |X|=" << accepted.X.size() << " |I|=" << accepted.I.size()
       << " |Y|=" << accepted.Y.size() << " |Y'|=" << accepted.Yprime.size() << " |Y'\\I|=" << pool.size()
       << " |J|=" << result.J.size();
  if (result.J.empty()) throw ExtractionError("accepted trial produced an empty J (" + diag.str() + ")", trials);
  if (result.I.empty() || result.report.cross_edges == 0) {
    throw ExtractionError("no I vertex is adjacent to J (" + diag.str() + ")", trials);
  }
  if (!result.report.valid) {
    throw ExtractionError("extracted pair failed verification: " + result.report.failure_reason, trials);
  }

  result.size_bound_holds = result.I.size() <= 230 * result.J.size();
  result.degree_bound_holds =
      result.report.average_degree >= Rational(BigInt(params.ell), BigInt(2310));
  result.accepted = std::move(accepted);
  return result;
}

/// Reduction, ordering and extraction on an arbitrary input graph. Vertex ids
/// in the returned sets and report refer to `g`.
template <typename Sampler = BernoulliSampler>
ExtractionResult extract_from_graph(const Graph& g, const Params& params, const ExtractOptions& options,
                                    const Sampler& sampler = Sampler{}) {
  const auto prepared = prepare(g, params.d);
  auto result = extract(prepared.ordered, params, options, sampler);
  auto lift = [&](const VertexSet& s) {
    VertexSet out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(prepared.original[v]);
    return out;
  };
  result.I = lift(result.I);
  result.J = lift(result.J);
  result.accepted.X = lift(result.accepted.X);
  result.accepted.I = lift(result.accepted.I);
  result.accepted.Y = lift(result.accepted.Y);
  result.accepted.Yprime = lift(result.accepted.Yprime);
  result.report = bipartite_pair_report(g, result.I, result.J);
  return result;
}

}  // namespace dbis
