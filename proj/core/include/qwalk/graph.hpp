#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qwalk {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;
using RealMatrix = Eigen::MatrixXd;

/// Undirected simple graph on vertices 0..n-1.
///
/// Edges are stored normalized (first < second) and sorted, so two graphs
/// built from the same edge set in any order compare equal.
class Graph {
 public:
  /// Throws ValidationError on n == 0, self-loops, duplicate edges, or
  /// endpoints >= n.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::vector<std::size_t> degrees() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

/// Complete bipartite search instance: partite sizes and marked counts.
struct BipartiteSpec {
  std::size_t n1 = 1;
  std::size_t n2 = 1;
  std::size_t k1 = 0;
  std::size_t k2 = 0;

  /// Throws ValidationError unless n1, n2 >= 1, k1 <= n1, k2 <= n2 and
  /// k1 + k2 >= 1.
  void validate() const;

  std::size_t total() const noexcept { return n1 + n2; }
  std::size_t unmarked_left() const noexcept { return n1 - k1; }
  std::size_t unmarked_right() const noexcept { return n2 - k2; }

  /// The same instance with the partite sets relabeled.
  BipartiteSpec swapped() const noexcept { return {n2, n1, k2, k1}; }

  friend bool operator==(const BipartiteSpec&, const BipartiteSpec&) = default;
};

struct BipartiteGraph {
  Graph graph;
  std::vector<Vertex> marked;
};

/// Left set is 0..n1-1, right set n1..n1+n2-1. The marked vertices are the
/// first k1 of the left set and the first k2 of the right set.
BipartiteGraph complete_bipartite(const BipartiteSpec& spec);

RealMatrix adjacency_matrix(const Graph& g);
RealMatrix degree_matrix(const Graph& g);
/// L = A - D.
RealMatrix laplacian(const Graph& g);
/// Q = A + D.
RealMatrix signless_laplacian(const Graph& g);

/// Five vertices, edges {0-1, 1-2, 1-3, 2-3}; vertex 4 is isolated.
Graph five_vertex_demo_graph();

/// Plain-text edge list: a header line "n m" followed by m lines "i j"
/// with 0-based endpoints. Throws ValidationError on malformed input.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace qwalk
