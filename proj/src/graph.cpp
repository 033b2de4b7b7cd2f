#include "reasm/graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "reasm/error.hpp"

namespace reasm {

std::string Edge::to_string() const {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 1) throw ValidationError("graph needs at least one vertex");
  adj_.assign(static_cast<std::size_t>(n) + 1, VertexSet{});
  deg_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges) {
    if (e.u == e.v) throw ValidationError("self-loop at vertex " + std::to_string(e.u));
    if (!has_vertex(e.u) || !has_vertex(e.v))
      throw ValidationError("edge " + e.to_string() + " has endpoint outside 1.." +
                            std::to_string(n));
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adj_[e.u].insert(e.v);
    adj_[e.v].insert(e.u);
    ++deg_[e.u];
    ++deg_[e.v];
  }
}

void Graph::require_vertex(Vertex v) const {
  if (!has_vertex(v)) throw ValidationError("unknown vertex " + std::to_string(v));
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  return has_vertex(a) && has_vertex(b) && adj_[a].contains(b);
}

const VertexSet& Graph::neighbors(Vertex v) const {
  require_vertex(v);
  return adj_[v];
}

int Graph::degree(Vertex v) const {
  require_vertex(v);
  return deg_[v];
}

int Graph::max_degree() const {
  return n_ == 0 ? 0 : *std::max_element(deg_.begin() + 1, deg_.end());
}

std::vector<Edge> Graph::bridges(const VertexSet& a, const VertexSet& b) const {
  if (a.intersects(b)) throw ValidationError("bridge sets must be disjoint");
  std::vector<Edge> out;
  for (const Edge& e : edges_) {
    if ((a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u)))
      out.push_back(e);
  }
  return out;
}

int Graph::bridge_count(const VertexSet& a, const VertexSet& b) const {
  if (a.intersects(b)) throw ValidationError("bridge sets must be disjoint");
  int count = 0;
  a.for_each([&](Vertex v) {
    if (has_vertex(v)) count += static_cast<int>(adj_[v].intersection_size(b));
  });
  return count;
}

int Graph::boundary_degree(const VertexSet& a) const {
  int count = 0;
  a.for_each([&](Vertex v) {
    require_vertex(v);
    count += deg_[v] - static_cast<int>(adj_[v].intersection_size(a));
  });
  return count;
}

bool Graph::is_connected() const {
  VertexSet seen{1};
  std::vector<Vertex> stack{1};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    adj_[v].for_each([&](Vertex w) {
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    });
  }
  return static_cast<int>(seen.size()) == n_;
}

std::vector<Vertex> Graph::cut_vertices() const {
  if (!is_connected()) throw ValidationError("cut_vertices requires a connected graph");
  // Iterative Tarjan low-link.
  std::vector<int> disc(n_ + 1, 0), low(n_ + 1, 0), parent(n_ + 1, 0);
  std::vector<bool> is_cut(n_ + 1, false);
  std::vector<std::vector<Vertex>> nbr(n_ + 1);
  for (Vertex v = 1; v <= n_; ++v) nbr[v] = adj_[v].to_vector();
  std::vector<std::size_t> next(n_ + 1, 0);
  int timer = 0;
  int root_children = 0;
  std::vector<Vertex> stack{1};
  disc[1] = low[1] = ++timer;
  while (!stack.empty()) {
    Vertex v = stack.back();
    if (next[v] < nbr[v].size()) {
      Vertex w = nbr[v][next[v]++];
      if (disc[w] == 0) {
        parent[w] = v;
        disc[w] = low[w] = ++timer;
        if (v == 1) ++root_children;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      stack.pop_back();
      Vertex p = parent[v];
      if (p != 0) {
        low[p] = std::min(low[p], low[v]);
        if (p != 1 && low[v] >= disc[p]) is_cut[p] = true;
      }
    }
  }
  if (root_children > 1) is_cut[1] = true;
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n_; ++v)
    if (is_cut[v]) out.push_back(v);
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<long long> parse_ints(std::string_view line, int lineno) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc{} || ptr != line.data() + j)
      throw ValidationError("malformed token '" + std::string(line.substr(i, j - i)) + "'", lineno);
    out.push_back(value);
    i = j;
  }
  return out;
}

} // namespace

Graph parse_graph(std::string_view text) {
  std::optional<std::pair<long long, long long>> header;
  std::vector<Edge> edges;
  long long declared_edges = 0;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    auto nums = parse_ints(line, lineno);
    if (nums.size() != 2) throw ValidationError("expected two integers", lineno);
    if (!header) {
      if (nums[0] < 1 || nums[1] < 0) throw ValidationError("invalid header 'n m'", lineno);
      header = {nums[0], nums[1]};
      declared_edges = nums[1];
      continue;
    }
    if (nums[0] == nums[1])
      throw ValidationError("self-loop at vertex " + std::to_string(nums[0]), lineno);
    if (nums[0] < 1 || nums[1] < 1 || nums[0] > header->first || nums[1] > header->first)
      throw ValidationError("endpoint out of range 1.." + std::to_string(header->first), lineno);
    edges.emplace_back(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
  }
  if (!header) throw ValidationError("missing header line 'n m'");
  if (static_cast<long long>(edges.size()) != declared_edges)
    throw ValidationError("header declares " + std::to_string(declared_edges) + " edges, found " +
                          std::to_string(edges.size()));
  return Graph(static_cast<int>(header->first), edges);
}

std::string to_text(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Deg3Report classify_deg3(const Graph& g) {
  if (!g.is_connected()) throw ValidationError("classify_deg3 requires a connected graph");
  Deg3Report r;
  r.max_degree = g.max_degree();
  auto cuts = g.cut_vertices();
  VertexSet cut_set = VertexSet::of(cuts);
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (g.degree(v) == 3 && !cut_set.contains(v)) {
      r.all_deg3_are_cut = false;
      if (r.max_degree == 3) r.noncut_deg3_witness = v;
      break;
    }
  }
  return r;
}

namespace generate {

Graph complete(int n) {
  if (n < 1) throw ValidationError("complete graph needs n >= 1");
  std::vector<Edge> es;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b) es.emplace_back(a, b);
  return Graph(n, es);
}

Graph star(int leaves) {
  if (leaves < 1) throw ValidationError("star needs at least one leaf");
  std::vector<Edge> es;
  for (Vertex k = 2; k <= leaves + 1; ++k) es.emplace_back(1, k);
  return Graph(leaves + 1, es);
}

Graph path(int n) {
  if (n < 1) throw ValidationError("path needs n >= 1");
  std::vector<Edge> es;
  for (Vertex k = 1; k < n; ++k) es.emplace_back(k, k + 1);
  return Graph(n, es);
}

Graph cycle(int n) {
  if (n < 3) throw ValidationError("cycle needs n >= 3");
  std::vector<Edge> es;
  for (Vertex k = 1; k < n; ++k) es.emplace_back(k, k + 1);
  es.emplace_back(n, 1);
  return Graph(n, es);
}

Graph qcube3() {
  // Labeling derived by exhaustive completion search (see tests/test_graph.cpp).
  return Graph(8, {{1, 2}, {1, 3}, {1, 6}, {2, 4}, {2, 8}, {3, 4},
                   {3, 5}, {4, 7}, {5, 6}, {5, 7}, {6, 8}, {7, 8}});
}

Graph ring_tree(int rings, int ring_size, int path_len) {
  if (rings < 1 || ring_size < 3 || path_len < 1)
    throw ValidationError("ring_tree needs rings >= 1, ring_size >= 3, path_len >= 1");
  std::vector<Edge> es;
  std::vector<Vertex> entry, exit;
  Vertex next = 1;
  for (int r = 0; r < rings; ++r) {
    Vertex first = next;
    for (int k = 0; k < ring_size; ++k) es.emplace_back(first + k, first + (k + 1) % ring_size);
    entry.push_back(first);
    exit.push_back(first + ring_size / 2);
    next += ring_size;
  }
  for (int r = 0; r + 1 < rings; ++r) {
    Vertex prev = exit[r];
    for (int k = 1; k < path_len; ++k) {
      es.emplace_back(prev, next);
      prev = next++;
    }
    es.emplace_back(prev, entry[r + 1]);
  }
  return Graph(next - 1, es);
}

Graph by_name(std::string_view family, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw ValidationError(std::string(family) + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (family == "complete") { need(1); return complete(params[0]); }
  if (family == "star") { need(1); return star(params[0]); }
  if (family == "path") { need(1); return path(params[0]); }
  if (family == "cycle") { need(1); return cycle(params[0]); }
  if (family == "qcube3") { need(0); return qcube3(); }
  if (family == "ring_tree") { need(3); return ring_tree(params[0], params[1], params[2]); }
  throw ValidationError("unknown graph family '" + std::string(family) + "'");
}

} // namespace generate

} // namespace reasm
