// dbis: command-line front end.
//
//   dbis gen <family> [params] --seed S --out FILE
//   dbis extract --in FILE --d D [--guarantee] --seed S --max-retries R [--json]
//   dbis oracle --in FILE
//   dbis stats <check> --in FILE --d D --trials T --seed S
//   dbis verify --in FILE --I LIST --J LIST
//
// Exit codes: 0 success, 1 verified failure, 2 usage or input error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dbis/dbis.hpp"
#include "dbis/json_report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("DBIS_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("DBIS_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

template <typename T>
T parse_number(const std::string& text, const std::string& what) {
  T value{};
  std::istringstream in(text);
  if (!(in >> value) || !in.eof()) throw UsageError("bad " + what + ": '" + text + "'");
  return value;
}

dbis::VertexSet parse_list(const std::string& text) {
  std::vector<dbis::Vertex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    out.push_back(parse_number<dbis::Vertex>(item, "vertex id"));
  }
  return out;
}

void print_json(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << '\n'; }

struct GenArgs {
  std::string family;
  std::vector<std::string> values;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenArgs& a) {
  auto need = [&](std::size_t k, const char* usage) {
    if (a.values.size() != k) throw UsageError(std::string("usage: gen ") + usage);
  };
  dbis::Graph g;
  if (a.family == "complete-bipartite") {
    need(2, "complete-bipartite A B");
    g = dbis::complete_bipartite(parse_number<std::size_t>(a.values[0], "A"),
                                 parse_number<std::size_t>(a.values[1], "B"));
  } else if (a.family == "random-bipartite") {
    need(3, "random-bipartite N1 N2 RHO");
    g = dbis::random_bipartite(parse_number<std::size_t>(a.values[0], "N1"),
                               parse_number<std::size_t>(a.values[1], "N2"),
                               parse_number<double>(a.values[2], "RHO"), a.seed);
  } else if (a.family == "c5-blowup") {
    need(1, "c5-blowup T");
    g = dbis::c5_blowup(parse_number<std::size_t>(a.values[0], "T"));
  } else if (a.family == "binomial-scrubbed") {
    need(2, "binomial-scrubbed N RHO");
    g = dbis::binomial_triangle_scrubbed(parse_number<std::size_t>(a.values[0], "N"),
                                         parse_number<double>(a.values[1], "RHO"), a.seed);
  } else {
    throw UsageError("unknown family '" + a.family +
                     "' (complete-bipartite, random-bipartite, c5-blowup, binomial-scrubbed)");
  }
  if (a.out.empty() || a.out == "-") {
    dbis::write_edge_list(std::cout, g);
  } else {
    std::ofstream out(a.out);
    if (!out) throw UsageError("cannot write " + a.out);
    dbis::write_edge_list(out, g);
  }
  return kOk;
}

struct ExtractArgs {
  std::string in;
  std::size_t d = 0;
  bool guarantee = false;
  std::uint64_t seed = 0;
  std::size_t max_retries = 1000;
  unsigned workers = 1;
  bool json = false;
};

int run_extract(const ExtractArgs& a) {
  const auto g = dbis::read_edge_list_file(a.in);
  const auto params = dbis::derive_params(a.d, a.guarantee);
  dbis::ExtractOptions options{a.seed, a.max_retries, a.workers};
  dbis::ExtractionResult result;
  try {
    result = dbis::extract_from_graph(g, params, options);
  } catch (const dbis::ExtractionError& e) {
    std::cerr << "extraction failed after " << e.trials() << " trials: " << e.what() << '\n';
    return kFailed;
  }
  const bool ok = result.report.valid && (!params.guarantee_mode || (result.size_bound_holds && result.degree_bound_holds));
  if (a.json) {
    print_json(dbis::to_json(result, dbis::graph_hash(g)));
  } else {
    std::cout << "d=" << params.d << " ell=" << params.ell << " q=" << dbis::decimal_string(params.q)
              << " threshold=" << params.y_prime_threshold << '\n'
              << "trials_used=" << result.trials_used << " |I|=" << result.I.size() << " |J|=" << result.J.size()
              << " cross_edges=" << result.report.cross_edges << '\n'
              << "average_degree=" << dbis::to_string(result.report.average_degree) << " ("
              << dbis::decimal_string(dbis::to_double(result.report.average_degree)) << ")"
              << " valid=" << (result.report.valid ? "true" : "false") << '\n';
    if (params.guarantee_mode) {
      std::cout << "|I| <= 230|J|: " << (result.size_bound_holds ? "yes" : "NO")
                << "  average degree >= ell/2310: " << (result.degree_bound_holds ? "yes" : "NO") << '\n';
    }
  }
  return ok ? kOk : kFailed;
}

int run_oracle(const std::string& in, std::size_t cap) {
  const auto g = dbis::read_edge_list_file(in);
  dbis::OracleResult result;
  try {
    result = dbis::max_induced_bipartite_average_degree(g, cap);
  } catch (const dbis::OracleError& e) {
    throw UsageError(e.what());
  }
  print_json(dbis::to_json(result, dbis::graph_hash(g)));
  return kOk;
}

struct StatsArgs {
  std::string check;
  std::string in;
  std::size_t d = 0;
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  std::optional<dbis::Vertex> vertex;
  bool guarantee = false;
  unsigned workers = 1;
};

int run_stats(const StatsArgs& a) {
  nlohmann::ordered_json j;
  j["check"] = a.check;
  j["seed"] = a.seed;
  j["trials"] = a.trials;
  bool passed = false;

  if (a.check == "check-q") {
    const auto c = dbis::check_q_bound(a.d);
    j["d"] = c.d;
    j["ell"] = c.ell;
    j["q"] = dbis::decimal_string(c.q);
    j["ratio"] = dbis::decimal_string(c.ratio);
    j["target"] = "0.35";
    j["passed"] = passed = c.passed;
    print_json(j);
    return passed ? kOk : kFailed;
  }

  if (a.in.empty()) throw UsageError("stats " + a.check + " needs --in");
  const auto g = dbis::read_edge_list_file(a.in);
  const auto params = dbis::derive_params(a.d, a.guarantee);
  const auto prepared = dbis::prepare(g, a.d);
  const auto& og = prepared.ordered;
  j["input_hash"] = dbis::hex64(dbis::graph_hash(g));
  j["params"] = dbis::to_json(params);

  auto reduced_id = [&](dbis::Vertex input) {
    const auto& orig = prepared.original;
    const auto it = std::lower_bound(orig.begin(), orig.end(), input);
    if (it == orig.end() || *it != input) {
      throw UsageError("vertex " + std::to_string(input) + " is not in the reduced graph");
    }
    return static_cast<dbis::Vertex>(it - orig.begin());
  };

  if (a.check == "conditional") {
    const dbis::Vertex y = a.vertex ? reduced_id(*a.vertex) : 0;
    const auto est = dbis::mc_conditional(og, params, y, a.trials, a.seed, a.workers);
    j["vertex"] = prepared.original[y];
    j["probability"] = dbis::to_json(est.probability);
    j["missed"] = dbis::to_json(est.missed);
    j["markov_tail"] = dbis::to_json(est.markov_tail);
    passed = est.probability.passed;
  } else if (a.check == "survival") {
    dbis::Vertex x = 0;
    if (a.vertex) {
      x = reduced_id(*a.vertex);
    } else {
      for (dbis::Vertex v = 0; v < og.graph.num_vertices(); ++v) {
        if (og.left_neighbors[v].size() > og.left_neighbors[x].size()) x = v;
      }
    }
    const auto est = dbis::mc_per_vertex_survival(og, params, x, a.trials, a.seed, a.workers);
    j["vertex"] = prepared.original[x];
    j["left_degree"] = est.left_degree;
    j["closed_form"] = dbis::decimal_string(est.closed_form);
    j["estimate"] = dbis::to_json(est.estimate);
    passed = est.estimate.passed;
  } else if (a.check == "edge-identity") {
    const auto est = dbis::mc_edge_identity(og, params, a.trials, a.seed, a.workers);
    j["estimate"] = dbis::to_json(est);
    passed = est.passed;
  } else if (a.check == "potential") {
    const auto est = dbis::mc_potential(og, params, a.trials, a.seed, a.workers);
    j["mean_phi"] = dbis::to_json(est.mean);
    j["success_rate"] = dbis::to_json(est.success);
    passed = est.mean.passed && est.success.passed;
  } else {
    throw UsageError("unknown check '" + a.check + "' (check-q, conditional, edge-identity, potential, survival)");
  }
  j["passed"] = passed;
  print_json(j);
  return passed ? kOk : kFailed;
}

int run_verify(const std::string& in, const std::string& i_list, const std::string& j_list) {
  const auto g = dbis::read_edge_list_file(in);
  const auto report = dbis::bipartite_pair_report(g, parse_list(i_list), parse_list(j_list));
  auto j = dbis::to_json(report);
  j["input_hash"] = dbis::hex64(dbis::graph_hash(g));
  print_json(j);
  return report.valid ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dense induced bipartite subgraphs of triangle-free graphs"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  try {
    seed = default_seed();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  GenArgs gen;
  gen.seed = seed;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated triangle-free graph as an edge list");
  gen_cmd->add_option("family", gen.family, "complete-bipartite | random-bipartite | c5-blowup | binomial-scrubbed")
      ->required();
  gen_cmd->add_option("params", gen.values, "Family parameters");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--out", gen.out, "Output file (stdout when omitted)");

  ExtractArgs ex;
  ex.seed = seed;
  auto* ex_cmd = app.add_subcommand("extract", "Reduce, sample and extract an induced bipartite pair");
  ex_cmd->add_option("--in", ex.in, "Edge-list file")->required();
  ex_cmd->add_option("--d", ex.d, "Minimum-degree parameter")->required();
  ex_cmd->add_flag("--guarantee", ex.guarantee, "Require d >= 16 and check the constant bounds");
  ex_cmd->add_option("--seed", ex.seed, "Master seed");
  ex_cmd->add_option("--max-retries", ex.max_retries, "Maximum number of sampling trials");
  ex_cmd->add_option("--workers", ex.workers, "Worker threads (does not affect results)");
  ex_cmd->add_flag("--json", ex.json, "Print the JSON report");

  std::string oracle_in;
  std::size_t oracle_cap = dbis::kOracleDefaultCap;
  auto* or_cmd = app.add_subcommand("oracle", "Exact maximum induced bipartite average degree (small graphs)");
  or_cmd->add_option("--in", oracle_in, "Edge-list file")->required();
  or_cmd->add_option("--cap", oracle_cap, "Largest vertex count accepted");

  StatsArgs st;
  st.seed = seed;
  auto* st_cmd = app.add_subcommand("stats", "Check one probabilistic claim numerically");
  st_cmd->add_option("check", st.check, "check-q | conditional | edge-identity | potential | survival")->required();
  st_cmd->add_option("--in", st.in, "Edge-list file");
  st_cmd->add_option("--d", st.d, "Minimum-degree parameter")->required();
  st_cmd->add_option("--trials", st.trials, "Number of Monte Carlo trials");
  st_cmd->add_option("--seed", st.seed, "Master seed");
  st_cmd->add_option("--vertex", st.vertex, "Vertex to examine (input id)");
  st_cmd->add_flag("--guarantee", st.guarantee, "Derive parameters in guarantee mode");
  st_cmd->add_option("--workers", st.workers, "Worker threads (does not affect results)");

  std::string verify_in, verify_i, verify_j;
  auto* ve_cmd = app.add_subcommand("verify", "Check that (I, J) induces a bipartite subgraph");
  ve_cmd->add_option("--in", verify_in, "Edge-list file")->required();
  ve_cmd->add_option("--I", verify_i, "Comma-separated vertex ids")->required();
  ve_cmd->add_option("--J", verify_j, "Comma-separated vertex ids")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*ex_cmd) return run_extract(ex);
    if (*or_cmd) return run_oracle(oracle_in, oracle_cap);
    if (*st_cmd) return run_stats(st);
    if (*ve_cmd) return run_verify(verify_in, verify_i, verify_j);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
