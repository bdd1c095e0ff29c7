#include "qwalk/graph.hpp"

#include <algorithm>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) throw ValidationError("graph must have at least one vertex");
  for (auto& [u, v] : edges_) {
    if (u >= n_ || v >= n_) {
      throw ValidationError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") has an endpoint outside 0.." + std::to_string(n_ - 1));
    }
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw ValidationError("duplicate edge (" + std::to_string(dup->first) + ", " +
                          std::to_string(dup->second) + ")");
  }
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

void BipartiteSpec::validate() const {
  if (n1 == 0 || n2 == 0) throw ValidationError("both partite sets must be nonempty");
  if (k1 > n1) throw ValidationError("k1 exceeds n1");
  if (k2 > n2) throw ValidationError("k2 exceeds n2");
  if (k1 + k2 == 0) throw ValidationError("at least one vertex must be marked");
}

BipartiteGraph complete_bipartite(const BipartiteSpec& spec) {
  spec.validate();
  std::vector<Edge> edges;
  edges.reserve(spec.n1 * spec.n2);
  for (Vertex i = 0; i < spec.n1; ++i) {
    for (Vertex j = 0; j < spec.n2; ++j) edges.emplace_back(i, spec.n1 + j);
  }
  std::vector<Vertex> marked;
  marked.reserve(spec.k1 + spec.k2);
  for (Vertex i = 0; i < spec.k1; ++i) marked.push_back(i);
  for (Vertex j = 0; j < spec.k2; ++j) marked.push_back(spec.n1 + j);
  return {Graph(spec.total(), std::move(edges)), std::move(marked)};
}

RealMatrix adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  RealMatrix a = RealMatrix::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 1.0;
    a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = 1.0;
  }
  return a;
}

RealMatrix degree_matrix(const Graph& g) {
  const auto deg = g.degrees();
  const auto n = static_cast<Eigen::Index>(deg.size());
  RealMatrix d = RealMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) d(i, i) = static_cast<double>(deg[static_cast<std::size_t>(i)]);
  return d;
}

RealMatrix laplacian(const Graph& g) { return adjacency_matrix(g) - degree_matrix(g); }

RealMatrix signless_laplacian(const Graph& g) { return adjacency_matrix(g) + degree_matrix(g); }

Graph five_vertex_demo_graph() { return Graph(5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}); }

}  // namespace qwalk
