#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"

namespace dbis {

// Text format:
//
//   n m
//   u v        (m lines, 0-based ids)
//
// Tokens are whitespace separated; everything after '#' on a line is ignored.

class EdgeListError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline bool parse_count(const std::string& token, std::uint64_t& out) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) return false;
  try {
    out = std::stoull(token);
  } catch (const std::out_of_range&) {
    return false;
  }
  return true;
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  std::vector<std::uint64_t> tokens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string word;
    while (words >> word) {
      std::uint64_t value = 0;
      if (!detail::parse_count(word, value)) {
        throw EdgeListError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                            word + "'");
      }
      tokens.push_back(value);
    }
  }
  if (tokens.size() < 2) throw EdgeListError("missing header line \"n m\"");
  const std::uint64_t n = tokens[0];
  const std::uint64_t m = tokens[1];
  if (n > UINT32_MAX) throw EdgeListError("vertex count too large");
  if (tokens.size() - 2 != 2 * m) {
    throw EdgeListError("header declares " + std::to_string(m) + " edges but " +
                        std::to_string(tokens.size() - 2) + " endpoint ids follow");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    const auto u = tokens[2 + 2 * i];
    const auto v = tokens[3 + 2 * i];
    if (u >= n || v >= n) {
      throw EdgeListError("edge " + std::to_string(i) + " has an endpoint outside [0," + std::to_string(n) + ")");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return Graph::from_edge_list(n, edges);
  } catch (const GraphError& e) {
    throw EdgeListError(e.what());
  }
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EdgeListError("cannot open " + path);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

// FNV-1a over the canonical serialization; identifies the input in reports.
inline std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_edge_list_string(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace dbis
