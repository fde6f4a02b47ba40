#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "extractor.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "rational.hpp"
#include "stats.hpp"

namespace dbis {

// JSON views of the result types. Rationals are "num/den" strings; doubles
// appear only as convenience duplicates, written in shortest round-trip form
// so identical inputs give byte-identical output.

inline std::string decimal_string(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline nlohmann::ordered_json number_json(const Rational& r) {
  return {{"decimal", decimal_string(to_double(r))}, {"exact", to_string(r)}};
}

inline nlohmann::ordered_json to_json(const Params& params) {
  nlohmann::ordered_json j;
  j["d"] = number_json(Rational(BigInt(params.d)));
  j["ell"] = number_json(Rational(BigInt(params.ell)));
  j["p"] = number_json(params.p);
  j["q"] = {{"decimal", decimal_string(params.q)}, {"exact", to_string(params.q_rational)}};
  j["y_prime_threshold"] = params.y_prime_threshold;
  j["guarantee_mode"] = params.guarantee_mode;
  return j;
}

inline nlohmann::ordered_json to_json(const BipartitePairReport& report) {
  nlohmann::ordered_json j;
  j["valid"] = report.valid;
  if (!report.valid) j["failure_reason"] = report.failure_reason;
  j["I_size"] = report.I.size();
  j["J_size"] = report.J.size();
  j["cross_edges"] = report.cross_edges;
  j["average_degree"] = to_string(report.average_degree);
  j["average_degree_decimal"] = decimal_string(to_double(report.average_degree));
  j["I"] = report.I;
  j["J"] = report.J;
  return j;
}

inline nlohmann::ordered_json to_json(const ExtractionResult& result, std::uint64_t input_hash) {
  nlohmann::ordered_json j;
  j["input_hash"] = hex64(input_hash);
  j["seed"] = result.seed;
  j["params"] = to_json(result.params);
  j["trials_used"] = result.trials_used;
  j["I_size"] = result.I.size();
  j["J_size"] = result.J.size();
  j["cross_edges"] = result.report.cross_edges;
  j["average_degree"] = to_string(result.report.average_degree);
  j["average_degree_decimal"] = decimal_string(to_double(result.report.average_degree));
  j["valid"] = result.report.valid;
  j["size_bound_holds"] = result.size_bound_holds;
  j["degree_bound_holds"] = result.degree_bound_holds;
  j["accepted_trial"] = {{"X_size", result.accepted.X.size()},
                         {"Y_size", result.accepted.Y.size()},
                         {"Yprime_size", result.accepted.Yprime.size()},
                         {"eY", result.accepted.eY},
                         {"phi", to_string(result.accepted.phi)},
                         {"phi_decimal", decimal_string(to_double(result.accepted.phi))}};
  j["I"] = result.I;
  j["J"] = result.J;
  return j;
}

inline nlohmann::ordered_json to_json(const OracleResult& result, std::uint64_t input_hash) {
  nlohmann::ordered_json j;
  j["input_hash"] = hex64(input_hash);
  j["best_value"] = to_string(result.best_value);
  j["best_value_decimal"] = decimal_string(to_double(result.best_value));
  j["witness_I"] = result.witness_I;
  j["witness_J"] = result.witness_J;
  return j;
}

inline nlohmann::ordered_json to_json(const Estimate& e) {
  return {{"mean", decimal_string(e.mean)},       {"trials", e.trials},
          {"ci_low", decimal_string(e.ci_low)},   {"ci_high", decimal_string(e.ci_high)},
          {"target", decimal_string(e.target)},   {"passed", e.passed}};
}

}  // namespace dbis
