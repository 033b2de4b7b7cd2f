#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "reasm/graph.hpp"
#include "reasm/reassembly_tree.hpp"

namespace reasm {

/// A bijection V -> {1..n}, stored as the vertex sequence (position i holds
/// the vertex placed at i).
class LinearArrangement {
public:
  LinearArrangement() = default;
  explicit LinearArrangement(std::vector<Vertex> order);

  const std::vector<Vertex>& order() const { return order_; }
  int size() const { return static_cast<int>(order_.size()); }
  Vertex at(int position) const { return order_[position - 1]; } // 1-based
  int position_of(Vertex v) const;                                 // 1-based
  VertexSet vertex_set() const { return VertexSet::of(order_); }

  std::string to_text() const; // "2 1 3 4"

  friend bool operator==(const LinearArrangement&, const LinearArrangement&) = default;

private:
  std::vector<Vertex> order_;
  std::vector<int> pos_; // index = vertex id, 0 when absent
};

LinearArrangement parse_arrangement(std::string_view text);

struct ArrangementReport {
  std::vector<int> cuts; // cut at positions 1..n; cuts[n-1] == 0
  int alpha = 0;
  long long beta = 0;
  long long gamma = 0;
};

/// Cuts from prefix boundary degrees; gamma from total edge length. beta and
/// gamma are computed independently and checked equal.
ArrangementReport evaluate_arrangement(const Graph& g, const LinearArrangement& phi);
int edge_length(const Graph& g, const LinearArrangement& phi, const Edge& e);

/// Arrangement read off a linear tree. The first two vertices go smaller
/// degree first, ties to the smaller id.
LinearArrangement induce_arrangement(const Graph& g, const ReassemblyTree& linear_tree);
/// Linear tree whose non-singleton clusters are the prefixes of phi.
ReassemblyTree induce_reassembling(const Graph& g, const LinearArrangement& phi);
/// Same as induce_reassembling without a graph: the tree of a vertex sequence.
ReassemblyTree linear_tree_of(const std::vector<Vertex>& sequence);

/// Leaf order of a linear tree: the two deepest leaves (unordered pair,
/// smaller id first) followed by the chain order.
std::vector<Vertex> linear_sequence(const ReassemblyTree& linear_tree);

bool is_anchored_reassembling(const Graph& g, const ReassemblyTree& linear_tree, Vertex w);
bool is_anchored_arrangement(const Graph& g, const LinearArrangement& phi, Vertex w);

ReassemblyTree restrict_tree(const ReassemblyTree& linear_tree, const VertexSet& subset);
LinearArrangement restrict_arrangement(const LinearArrangement& phi, const VertexSet& subset);

void require_ground_set(const Graph& g, const LinearArrangement& phi);

} // namespace reasm
