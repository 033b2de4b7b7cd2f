#include "reasm/linear_layout.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "reasm/error.hpp"

namespace reasm {

LinearArrangement::LinearArrangement(std::vector<Vertex> order) : order_(std::move(order)) {
  if (order_.empty()) throw ValidationError("arrangement is empty");
  for (std::size_t i = 0; i < order_.size(); ++i) {
    Vertex v = order_[i];
    if (v < 1) throw ValidationError("vertex ids start at 1");
    if (static_cast<std::size_t>(v) >= pos_.size()) pos_.resize(static_cast<std::size_t>(v) + 1, 0);
    if (pos_[v] != 0) throw ValidationError("vertex " + std::to_string(v) + " appears twice");
    pos_[v] = static_cast<int>(i) + 1;
  }
}

int LinearArrangement::position_of(Vertex v) const {
  if (v < 1 || static_cast<std::size_t>(v) >= pos_.size() || pos_[v] == 0)
    throw ValidationError("vertex " + std::to_string(v) + " is not arranged");
  return pos_[v];
}

std::string LinearArrangement::to_text() const {
  std::string s;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(order_[i]);
  }
  return s;
}

LinearArrangement parse_arrangement(std::string_view text) {
  std::vector<Vertex> order;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    if (tok.front() == '#') {
      std::getline(is, tok);
      continue;
    }
    char* end = nullptr;
    long v = std::strtol(tok.c_str(), &end, 10);
    if (*end != '\0') throw ValidationError("malformed vertex id '" + tok + "'");
    order.push_back(static_cast<Vertex>(v));
  }
  return LinearArrangement(std::move(order));
}

void require_ground_set(const Graph& g, const LinearArrangement& phi) {
  if (phi.size() != g.n() || phi.vertex_set() != g.vertices())
    throw ValidationError("arrangement is not a permutation of 1.." + std::to_string(g.n()));
}

ArrangementReport evaluate_arrangement(const Graph& g, const LinearArrangement& phi) {
  require_ground_set(g, phi);
  ArrangementReport r;
  VertexSet prefix;
  int cut = 0;
  for (Vertex v : phi.order()) {
    cut += g.degree(v) - 2 * static_cast<int>(g.neighbors(v).intersection_size(prefix));
    prefix.insert(v);
    r.cuts.push_back(cut);
    r.alpha = std::max(r.alpha, cut);
    r.beta += cut;
  }
  for (const Edge& e : g.edges()) r.gamma += edge_length(g, phi, e);
  if (r.beta != r.gamma)
    throw std::logic_error("beta/gamma mismatch: " + std::to_string(r.beta) + " vs " + std::to_string(r.gamma));
  return r;
}

int edge_length(const Graph& g, const LinearArrangement& phi, const Edge& e) {
  if (!g.has_edge(e.u, e.v)) throw ValidationError("unknown edge " + e.to_string());
  return std::abs(phi.position_of(e.u) - phi.position_of(e.v));
}

std::vector<Vertex> linear_sequence(const ReassemblyTree& t) {
  if (!t.is_linear()) throw ValidationError("tree is not linear");
  std::vector<Vertex> rev;
  int node = t.root();
  while (!t.is_leaf(node)) {
    auto [a, b] = t.children(node);
    if (t.is_leaf(a) && t.is_leaf(b)) {
      Vertex x = t.clusters()[a].min(), y = t.clusters()[b].min();
      rev.push_back(std::max(x, y));
      rev.push_back(std::min(x, y));
      break;
    }
    int leaf = t.is_leaf(a) ? a : b;
    rev.push_back(t.clusters()[leaf].min());
    node = leaf == a ? b : a;
  }
  if (rev.empty()) rev.push_back(t.clusters()[t.root()].min());
  return {rev.rbegin(), rev.rend()};
}

LinearArrangement induce_arrangement(const Graph& g, const ReassemblyTree& t) {
  require_ground_set(g, t);
  auto seq = linear_sequence(t);
  if (seq.size() >= 2 && g.degree(seq[0]) > g.degree(seq[1])) std::swap(seq[0], seq[1]);
  return LinearArrangement(std::move(seq));
}

ReassemblyTree linear_tree_of(const std::vector<Vertex>& sequence) {
  std::vector<VertexSet> clusters;
  VertexSet prefix;
  for (Vertex v : sequence) {
    clusters.push_back(VertexSet{v});
    prefix.insert(v);
    clusters.push_back(prefix);
  }
  return ReassemblyTree::validate(prefix, std::move(clusters));
}

ReassemblyTree induce_reassembling(const Graph& g, const LinearArrangement& phi) {
  require_ground_set(g, phi);
  return linear_tree_of(phi.order());
}

bool is_anchored_reassembling(const Graph& g, const ReassemblyTree& t, Vertex w) {
  require_ground_set(g, t);
  auto seq = linear_sequence(t);
  if (seq.size() < 2) return false;
  Vertex other;
  if (seq[0] == w) other = seq[1];
  else if (seq[1] == w) other = seq[0];
  else return false;
  return g.degree(w) <= g.degree(other);
}

bool is_anchored_arrangement(const Graph& g, const LinearArrangement& phi, Vertex w) {
  require_ground_set(g, phi);
  return phi.size() >= 2 && phi.at(1) == w && g.degree(w) <= g.degree(phi.at(2));
}

ReassemblyTree restrict_tree(const ReassemblyTree& t, const VertexSet& subset) {
  if (subset.empty()) throw ValidationError("restriction to an empty vertex set");
  if (!subset.is_subset_of(t.ground_set())) throw ValidationError("restriction set is not inside the ground set");
  if (!t.is_linear()) throw ValidationError("tree is not linear");
  std::vector<VertexSet> clusters;
  for (const auto& x : t.clusters()) {
    VertexSet y = x & subset;
    if (!y.empty()) clusters.push_back(std::move(y));
  }
  return ReassemblyTree::validate(subset, std::move(clusters));
}

LinearArrangement restrict_arrangement(const LinearArrangement& phi, const VertexSet& subset) {
  if (subset.empty()) throw ValidationError("restriction to an empty vertex set");
  std::vector<Vertex> out;
  for (Vertex v : phi.order())
    if (subset.contains(v)) out.push_back(v);
  if (out.size() != subset.size()) throw ValidationError("restriction set is not inside the arrangement");
  return LinearArrangement(std::move(out));
}

} // namespace reasm
