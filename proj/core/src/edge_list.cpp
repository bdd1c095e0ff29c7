#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

namespace {

// Reads one non-negative integer token; rejects signs and trailing garbage.
std::size_t read_index(std::istream& in, const char* what) {
  std::string token;
  if (!(in >> token)) throw ValidationError(std::string("edge list: missing ") + what);
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw ValidationError(std::string("edge list: bad ") + what + " '" + token + "'");
  }
  try {
    return static_cast<std::size_t>(std::stoull(token));
  } catch (const std::out_of_range&) {
    throw ValidationError(std::string("edge list: ") + what + " out of range");
  }
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  const auto n = read_index(in, "vertex count");
  const auto m = read_index(in, "edge count");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    const auto i = read_index(in, "edge endpoint");
    const auto j = read_index(in, "edge endpoint");
    edges.emplace_back(i, j);
  }
  std::string rest;
  if (in >> rest) throw ValidationError("edge list: more edges than declared in header");
  return Graph(n, std::move(edges));
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open edge list '" + path.string() + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace qwalk
