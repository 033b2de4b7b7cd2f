#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reasm/vertex_set.hpp"

namespace reasm {

/// Undirected edge with u < v. The defaulted ordering is the edge order used
/// by canonical orderings: lexicographic on (smaller id, larger id).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  std::string to_string() const;
};

/// Simple undirected graph on vertices 1..n. Immutable once built.
class Graph {
public:
  Graph() = default;
  /// Throws ValidationError on self-loops or out-of-range endpoints.
  /// Duplicate edges collapse to one.
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; } // sorted
  VertexSet vertices() const { return VertexSet::range(1, n_); }

  bool has_vertex(Vertex v) const { return v >= 1 && v <= n_; }
  bool has_edge(Vertex a, Vertex b) const;
  const VertexSet& neighbors(Vertex v) const;
  int degree(Vertex v) const;
  int max_degree() const;
  int degree_sum() const { return 2 * m(); }

  /// Edges with one endpoint in a and the other in b (sorted).
  std::vector<Edge> bridges(const VertexSet& a, const VertexSet& b) const;
  int bridge_count(const VertexSet& a, const VertexSet& b) const;
  /// Number of edges leaving a.
  int boundary_degree(const VertexSet& a) const;

  bool is_connected() const;
  std::vector<Vertex> cut_vertices() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  void require_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_; // index = vertex id
  std::vector<int> deg_;
};

struct Deg3Report {
  int max_degree = 0;
  bool all_deg3_are_cut = true;
  std::optional<Vertex> noncut_deg3_witness;
};

/// Edge-list text: first non-comment line "n m", then m lines "u v".
/// '#' starts a comment line, blank lines are ignored.
Graph parse_graph(std::string_view text);
/// Inverse of parse_graph; edges sorted by (min id, max id).
std::string to_text(const Graph& g);

/// Requires a connected graph.
Deg3Report classify_deg3(const Graph& g);

namespace generate {
Graph complete(int n);
Graph star(int leaves); // center 1, leaves 2..leaves+1
Graph path(int n);
Graph cycle(int n);
Graph qcube3();
/// `rings` cycles of `ring_size` vertices chained by paths of `path_len`
/// edges. Consecutive rings attach at distinct ring vertices, so max
/// degree is 3 and every degree-3 vertex is a cut vertex.
Graph ring_tree(int rings, int ring_size, int path_len);
/// Dispatch by family name with positional integer parameters.
Graph by_name(std::string_view family, const std::vector<int>& params);
} // namespace generate

} // namespace reasm
