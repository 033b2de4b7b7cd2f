#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "reasm/graph.hpp"
#include "reasm/vertex_set.hpp"

namespace reasm {

/// Unordered binary tree over a ground set, stored as its clusters.
///
/// Clusters are kept sorted (by member list) and each one knows its parent,
/// sibling and children, so structural queries are O(1) after validation.
class ReassemblyTree {
public:
  static constexpr int kNone = -1;

  /// Checks the three defining conditions (singletons, root, unique sibling),
  /// laminarity and the 2n-1 cluster count. Throws ValidationError naming
  /// the violated condition.
  static ReassemblyTree validate(const VertexSet& ground, std::vector<VertexSet> clusters);

  const VertexSet& ground_set() const { return ground_; }
  int leaf_count() const { return static_cast<int>(ground_.size()); }
  const std::vector<VertexSet>& clusters() const { return clusters_; }
  int cluster_count() const { return static_cast<int>(clusters_.size()); }

  int root() const { return root_; }
  int index_of(const VertexSet& x) const; // kNone when absent
  bool contains(const VertexSet& x) const { return index_of(x) != kNone; }
  int leaf_index(Vertex v) const;

  int parent_index(int i) const { return parent_[i]; }
  int sibling_index(int i) const { return sibling_[i]; }
  std::pair<int, int> children(int i) const { return children_[i]; }
  bool is_leaf(int i) const { return children_[i].first == kNone; }

  const VertexSet& sibling(const VertexSet& x) const;
  const VertexSet& parent(const VertexSet& x) const;
  /// [{v}, ..., V]: the unique maximal nested chain from a leaf.
  std::vector<VertexSet> path_to_root(Vertex v) const;

  int height() const { return height_[root_]; }
  int height_of(const VertexSet& x) const;
  ReassemblyTree subtree(const VertexSet& x) const;

  bool is_linear() const;

  /// Canonical bracket text, smaller-minimum child first.
  std::string to_text() const;

  friend bool operator==(const ReassemblyTree& a, const ReassemblyTree& b) {
    return a.ground_ == b.ground_ && a.clusters_ == b.clusters_;
  }

private:
  int require(const VertexSet& x) const;
  std::string text_of(int i) const;

  VertexSet ground_;
  std::vector<VertexSet> clusters_;
  std::vector<int> parent_;
  std::vector<int> sibling_;
  std::vector<std::pair<int, int>> children_;
  std::vector<int> height_;
  std::unordered_map<VertexSet, int, VertexSetHash> index_;
  int root_ = kNone;
};

ReassemblyTree parse_tree(std::string_view text);
inline std::string print_tree(const ReassemblyTree& t) { return t.to_text(); }

struct StrictnessReport {
  bool strict = true;
  std::optional<std::pair<VertexSet, VertexSet>> violation; // first sibling pair without bridges
};
StrictnessReport is_strict(const Graph& g, const ReassemblyTree& t);

struct ClusterDegree {
  VertexSet set;
  int degree = 0;
};

struct MeasureReport {
  int alpha = 0;
  long long beta = 0;
  std::vector<ClusterDegree> per_cluster; // same order as tree.clusters()
};

/// alpha = max and beta = sum of boundary degrees over all 2n-1 clusters.
MeasureReport measures(const Graph& g, const ReassemblyTree& t);

using Partition = std::vector<VertexSet>; // blocks sorted by member list

/// All maximal collections of >= 2 pairwise disjoint clusters, finest first.
std::vector<Partition> cross_sections(const ReassemblyTree& t);

/// Throws ValidationError unless the tree is over exactly the vertices of g.
void require_ground_set(const Graph& g, const ReassemblyTree& t);

} // namespace reasm
