#include "reasm/reassembly_tree.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "reasm/error.hpp"

namespace reasm {

ReassemblyTree ReassemblyTree::validate(const VertexSet& ground, std::vector<VertexSet> clusters) {
  if (ground.empty()) throw ValidationError("tree ground set is empty");
  std::sort(clusters.begin(), clusters.end());
  clusters.erase(std::unique(clusters.begin(), clusters.end()), clusters.end());

  ReassemblyTree t;
  t.ground_ = ground;
  for (const auto& x : clusters) {
    if (x.empty()) throw ValidationError("empty cluster");
    if (!x.is_subset_of(ground))
      throw ValidationError("cluster " + x.to_string() + " is not a subset of the ground set");
  }
  for (std::size_t i = 0; i < clusters.size(); ++i) t.index_.emplace(clusters[i], static_cast<int>(i));

  // Condition 1: every singleton.
  ground.for_each([&](Vertex v) {
    if (!t.index_.count(VertexSet{v}))
      throw ValidationError("condition 1 violated: missing singleton {" + std::to_string(v) + "}");
  });
  // Condition 2: the root.
  auto root_it = t.index_.find(ground);
  if (root_it == t.index_.end()) throw ValidationError("condition 2 violated: missing root " + ground.to_string());

  // Condition 3: a unique sibling for every non-root cluster.
  const std::size_t k = clusters.size();
  std::vector<int> sibling(k, kNone), parent(k, kNone);
  for (std::size_t i = 0; i < k; ++i) {
    if (clusters[i] == ground) continue;
    int partners = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || clusters[i].intersects(clusters[j])) continue;
      auto u = t.index_.find(clusters[i] | clusters[j]);
      if (u == t.index_.end()) continue;
      ++partners;
      sibling[i] = static_cast<int>(j);
      parent[i] = u->second;
    }
    if (partners != 1)
      throw ValidationError("condition 3 violated: cluster " + clusters[i].to_string() + " has " +
                            std::to_string(partners) + " sibling candidates, expected exactly 1");
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (clusters[i].intersects(clusters[j]) && !clusters[i].is_subset_of(clusters[j]) &&
          !clusters[j].is_subset_of(clusters[i]))
        throw ValidationError("clusters " + clusters[i].to_string() + " and " + clusters[j].to_string() +
                              " overlap without nesting");
  if (k != 2 * ground.size() - 1)
    throw ValidationError("cluster count " + std::to_string(k) + " differs from 2n-1 = " +
                          std::to_string(2 * ground.size() - 1));

  t.clusters_ = std::move(clusters);
  t.root_ = root_it->second;
  t.sibling_ = std::move(sibling);
  t.parent_ = std::move(parent);
  t.children_.assign(k, {kNone, kNone});
  for (std::size_t i = 0; i < k; ++i) {
    int p = t.parent_[i];
    if (p == kNone) continue;
    auto& ch = t.children_[p];
    int s = t.sibling_[i];
    if (ch.first == kNone) {
      // Smaller-minimum child first.
      if (t.clusters_[i].min() < t.clusters_[s].min()) ch = {static_cast<int>(i), s};
      else ch = {s, static_cast<int>(i)};
    }
  }
  std::vector<int> by_size(k);
  std::iota(by_size.begin(), by_size.end(), 0);
  std::sort(by_size.begin(), by_size.end(),
            [&](int a, int b) { return t.clusters_[a].size() < t.clusters_[b].size(); });
  t.height_.assign(k, 0);
  for (int i : by_size) {
    auto [a, b] = t.children_[i];
    if (a != kNone) t.height_[i] = 1 + std::max(t.height_[a], t.height_[b]);
  }
  return t;
}

int ReassemblyTree::index_of(const VertexSet& x) const {
  auto it = index_.find(x);
  return it == index_.end() ? kNone : it->second;
}

int ReassemblyTree::require(const VertexSet& x) const {
  int i = index_of(x);
  if (i == kNone) throw ValidationError("unknown cluster " + x.to_string());
  return i;
}

int ReassemblyTree::leaf_index(Vertex v) const { return require(VertexSet{v}); }

const VertexSet& ReassemblyTree::sibling(const VertexSet& x) const {
  int i = require(x);
  if (i == root_) throw ValidationError("the root has no sibling");
  return clusters_[sibling_[i]];
}

const VertexSet& ReassemblyTree::parent(const VertexSet& x) const {
  int i = require(x);
  if (i == root_) throw ValidationError("the root has no parent");
  return clusters_[parent_[i]];
}

std::vector<VertexSet> ReassemblyTree::path_to_root(Vertex v) const {
  std::vector<VertexSet> out;
  for (int i = leaf_index(v); i != kNone; i = parent_[i]) out.push_back(clusters_[i]);
  return out;
}

int ReassemblyTree::height_of(const VertexSet& x) const { return height_[require(x)]; }

ReassemblyTree ReassemblyTree::subtree(const VertexSet& x) const {
  require(x);
  std::vector<VertexSet> sub;
  for (const auto& c : clusters_)
    if (c.is_subset_of(x)) sub.push_back(c);
  return validate(x, std::move(sub));
}

bool ReassemblyTree::is_linear() const {
  // Every internal node has at least one leaf child.
  for (std::size_t i = 0; i < clusters_.size(); ++i) {
    auto [a, b] = children_[i];
    if (a != kNone && !is_leaf(a) && !is_leaf(b)) return false;
  }
  return true;
}

std::string ReassemblyTree::text_of(int i) const {
  auto [a, b] = children_[i];
  if (a == kNone) return std::to_string(clusters_[i].min());
  return "(" + text_of(a) + " " + text_of(b) + ")";
}

std::string ReassemblyTree::to_text() const { return text_of(root_); }

namespace {

class TreeParser {
public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  ReassemblyTree run() {
    VertexSet top = node();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    return ReassemblyTree::validate(top, std::move(clusters_));
  }

private:
  VertexSet node() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unbalanced brackets: unexpected end of text");
    if (text_[pos_] == '(') {
      ++pos_;
      VertexSet left = node();
      VertexSet right = node();
      skip_ws();
      if (pos_ >= text_.size()) fail("unbalanced brackets: missing ')'");
      if (text_[pos_] != ')') fail("each bracket pair must hold exactly two subtrees");
      ++pos_;
      VertexSet both = left | right;
      clusters_.push_back(both);
      return both;
    }
    if (!std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == ')') fail("unbalanced brackets: unexpected ')'");
      fail(std::string("unexpected character '") + text_[pos_] + "'");
    }
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1'000'000'000) fail("leaf id too large");
    }
    if (v < 1) fail("leaf ids start at 1");
    if (seen_.contains(static_cast<Vertex>(v))) fail("repeated leaf " + std::to_string(v));
    seen_.insert(static_cast<Vertex>(v));
    VertexSet leaf{static_cast<Vertex>(v)};
    clusters_.push_back(leaf);
    return leaf;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ValidationError(msg + " (at offset " + std::to_string(pos_) + ")");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  VertexSet seen_;
  std::vector<VertexSet> clusters_;
};

} // namespace

ReassemblyTree parse_tree(std::string_view text) { return TreeParser(text).run(); }

void require_ground_set(const Graph& g, const ReassemblyTree& t) {
  if (t.ground_set() != g.vertices())
    throw ValidationError("tree ground set " + t.ground_set().to_string() +
                          " does not match graph vertices 1.." + std::to_string(g.n()));
}

StrictnessReport is_strict(const Graph& g, const ReassemblyTree& t) {
  require_ground_set(g, t);
  StrictnessReport r;
  for (int i = 0; i < t.cluster_count(); ++i) {
    auto [a, b] = t.children(i);
    if (a == ReassemblyTree::kNone) continue;
    if (g.bridge_count(t.clusters()[a], t.clusters()[b]) == 0) {
      r.strict = false;
      r.violation = std::make_pair(t.clusters()[a], t.clusters()[b]);
      return r;
    }
  }
  return r;
}

MeasureReport measures(const Graph& g, const ReassemblyTree& t) {
  require_ground_set(g, t);
  MeasureReport r;
  for (const auto& c : t.clusters()) {
    int d = g.boundary_degree(c);
    r.alpha = std::max(r.alpha, d);
    r.beta += d;
    r.per_cluster.push_back({c, d});
  }
  return r;
}

std::vector<Partition> cross_sections(const ReassemblyTree& t) {
  constexpr std::size_t kMaxSections = 2'000'000;
  // cuts[i]: every partition of cluster i into clusters of its subtree.
  std::vector<std::vector<std::vector<int>>> cuts(t.cluster_count());
  std::vector<int> order(t.cluster_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return t.clusters()[a].size() < t.clusters()[b].size(); });
  for (int i : order) {
    cuts[i].push_back({i});
    auto [a, b] = t.children(i);
    if (a == ReassemblyTree::kNone) continue;
    if (cuts[a].size() * cuts[b].size() > kMaxSections) throw LimitError("too many cross-sections");
    for (const auto& ca : cuts[a])
      for (const auto& cb : cuts[b]) {
        auto merged = ca;
        merged.insert(merged.end(), cb.begin(), cb.end());
        cuts[i].push_back(std::move(merged));
      }
  }
  std::vector<Partition> out;
  for (const auto& cut : cuts[t.root()]) {
    if (cut.size() < 2) continue;
    Partition p;
    for (int i : cut) p.push_back(t.clusters()[i]);
    std::sort(p.begin(), p.end());
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return out;
}

} // namespace reasm
