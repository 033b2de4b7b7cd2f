#include "reasm/solvers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "reasm/error.hpp"

namespace reasm {

std::string to_string(Objective o) { return o == Objective::alpha ? "alpha" : "beta"; }

std::string to_string(SolveMode m) {
  switch (m) {
  case SolveMode::arrangement: return "arrangement";
  case SolveMode::linear_reassembling: return "linear";
  case SolveMode::binary_reassembling: return "binary";
  }
  return "?";
}

Objective parse_objective(std::string_view s) {
  if (s == "alpha") return Objective::alpha;
  if (s == "beta") return Objective::beta;
  throw ValidationError("objective must be alpha or beta, got '" + std::string(s) + "'");
}

std::string SolveResult::witness_text() const {
  if (arrangement) return arrangement->to_text();
  if (tree) return tree->to_text();
  return "";
}

int SolverOptions::default_dp_limit() {
  if (const char* env = std::getenv("REASM_DP_LIMIT")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 24;
}

namespace {

using Clock = std::chrono::steady_clock;
constexpr int kHardDpCap = 30;

long long elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

// Bit i stands for vertex i+1.
class PrefixTable {
public:
  PrefixTable(const Graph& g, Objective obj, int limit) : n_(g.n()), obj_(obj) {
    if (n_ < 1) throw ValidationError("graph has no vertices");
    if (n_ > std::min(limit, kHardDpCap))
      throw LimitError("n = " + std::to_string(n_) + " exceeds the DP limit " + std::to_string(std::min(limit, kHardDpCap)));
    adj_.assign(n_, 0);
    deg_.assign(n_, 0);
    for (const Edge& e : g.edges()) {
      adj_[e.u - 1] |= 1U << (e.v - 1);
      adj_[e.v - 1] |= 1U << (e.u - 1);
    }
    for (int i = 0; i < n_; ++i) deg_[i] = std::popcount(adj_[i]);

    const std::uint32_t full = size() - 1;
    cut_.assign(size(), 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
      int v = std::countr_zero(s);
      std::uint32_t rest = s & (s - 1);
      cut_[s] = static_cast<std::uint16_t>(cut_[rest] + deg_[v] - 2 * std::popcount(adj_[v] & rest));
    }
    // best_[S]: optimal cost of the cuts of all prefixes strictly larger than S.
    best_.assign(size(), 0);
    for (std::uint32_t s = full; s-- > 0;) {
      std::uint32_t b = std::numeric_limits<std::uint32_t>::max();
      for (std::uint32_t free = full & ~s; free; free &= free - 1) {
        std::uint32_t t = s | (free & -free);
        b = std::min(b, step(t));
      }
      best_[s] = b;
    }
  }

  std::uint32_t size() const { return std::uint32_t{1} << n_; }
  int degree(int i) const { return deg_[i]; }
  std::uint32_t combine(std::uint32_t cut, std::uint32_t rest) const {
    return obj_ == Objective::beta ? cut + rest : std::max(cut, rest);
  }
  // Cost of placing prefix t next and finishing optimally.
  std::uint32_t step(std::uint32_t t) const { return combine(cut_[t], best_[t]); }

  std::uint32_t free_value() const { return best_[0]; }

  // Cost with vertex w first and v second (indices).
  std::uint32_t anchored_value(int w, int v) const {
    std::uint32_t a = 1U << w;
    return combine(cut_[a], step(a | (1U << v)));
  }

  // Lex-least completion of `prefix` whose whole cost is at most `target`.
  std::vector<Vertex> complete(std::vector<int> prefix, std::uint32_t target) const {
    std::uint32_t s = 0;
    std::uint32_t budget = target;
    for (int i : prefix) {
      s |= 1U << i;
      if (obj_ == Objective::beta) budget -= cut_[s];
    }
    const std::uint32_t full = size() - 1;
    while (s != full) {
      for (int i = 0; i < n_; ++i) {
        if (s >> i & 1U) continue;
        std::uint32_t t = s | (1U << i);
        if (step(t) <= budget) {
          s = t;
          if (obj_ == Objective::beta) budget -= cut_[s];
          prefix.push_back(i);
          break;
        }
      }
    }
    std::vector<Vertex> out;
    for (int i : prefix) out.push_back(i + 1);
    return out;
  }

private:
  int n_;
  Objective obj_;
  std::vector<std::uint32_t> adj_;
  std::vector<int> deg_;
  std::vector<std::uint16_t> cut_;
  std::vector<std::uint32_t> best_;
};

struct AnchorChoice {
  std::uint32_t value = std::numeric_limits<std::uint32_t>::max();
  int second = -1;
};

// Best admissible second vertex for anchor w (index); second = -1 if none.
AnchorChoice best_second(const PrefixTable& t, int n, int w) {
  AnchorChoice c;
  for (int v = 0; v < n; ++v) {
    if (v == w || t.degree(v) < t.degree(w)) continue;
    std::uint32_t val = t.anchored_value(w, v);
    if (val < c.value) c = {val, v};
  }
  return c;
}

void require_anchor(const Graph& g, Vertex w) {
  if (!g.has_vertex(w)) throw ValidationError("anchor " + std::to_string(w) + " is not a vertex");
}

[[noreturn]] void infeasible(const Graph& g, Vertex w) {
  throw InfeasibleError("nothing can be anchored at " + std::to_string(w) + ": no other vertex has degree >= " +
                        std::to_string(g.degree(w)));
}

} // namespace

SolveResult exact_arrangement(const Graph& g, Objective obj, std::optional<Vertex> anchor, const SolverOptions& opts) {
  auto t0 = Clock::now();
  if (anchor) require_anchor(g, *anchor);
  PrefixTable t(g, obj, opts.dp_limit);
  SolveResult r;
  r.objective = obj;
  r.mode = SolveMode::arrangement;
  r.anchor = anchor;
  if (!anchor) {
    r.value = t.free_value();
    r.arrangement = LinearArrangement(t.complete({}, t.free_value()));
  } else if (g.n() == 1) {
    r.value = 0;
    r.arrangement = LinearArrangement(std::vector<Vertex>{*anchor});
  } else {
    int w = *anchor - 1;
    auto c = best_second(t, g.n(), w);
    if (c.second < 0) infeasible(g, *anchor);
    r.value = c.value;
    r.arrangement = LinearArrangement(t.complete({w, c.second}, c.value));
  }
  r.stats = {static_cast<long long>(t.size()), elapsed_ms(t0)};
  return r;
}

SolveResult exact_linear_reassembling(const Graph& g, Objective obj, std::optional<Vertex> anchor,
                                      const SolverOptions& opts) {
  auto t0 = Clock::now();
  if (anchor) require_anchor(g, *anchor);
  PrefixTable t(g, obj, opts.dp_limit);
  const long long deg_sum = g.degree_sum();
  const long long max_deg = g.max_degree();
  SolveResult r;
  r.objective = obj;
  r.mode = SolveMode::linear_reassembling;
  r.anchor = anchor;
  if (g.n() == 1) {
    r.value = 0;
    r.tree = linear_tree_of({1});
    r.stats = {static_cast<long long>(t.size()), elapsed_ms(t0)};
    return r;
  }
  auto tree_value = [&](int w, std::uint32_t arrangement_value) -> long long {
    return obj == Objective::beta ? arrangement_value + deg_sum - g.degree(w + 1)
                                  : std::max<long long>(max_deg, arrangement_value);
  };
  long long best = std::numeric_limits<long long>::max();
  int best_w = -1, best_v = -1;
  std::uint32_t best_arrangement = 0;
  for (int w = 0; w < g.n(); ++w) {
    if (anchor && w != *anchor - 1) continue;
    auto c = best_second(t, g.n(), w);
    if (c.second < 0) continue;
    long long val = tree_value(w, c.value);
    if (val < best) best = val, best_w = w, best_v = c.second, best_arrangement = c.value;
  }
  if (best_w < 0) infeasible(g, *anchor);
  r.value = best;
  r.tree = linear_tree_of(t.complete({best_w, best_v}, best_arrangement));
  if (!anchor) r.anchor = best_w + 1;
  r.stats = {static_cast<long long>(t.size()), elapsed_ms(t0)};
  return r;
}

SolveResult brute_force_arrangement(const Graph& g, Objective obj, std::optional<Vertex> anchor) {
  auto t0 = Clock::now();
  const int n = g.n();
  if (n < 1) throw ValidationError("graph has no vertices");
  if (n > 10) throw LimitError("brute force arrangement is limited to n <= 10, got " + std::to_string(n));
  if (anchor) require_anchor(g, *anchor);

  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  long long best = std::numeric_limits<long long>::max();
  std::vector<Vertex> witness;
  long long states = 0;
  do {
    if (anchor && (perm[0] != *anchor || (n > 1 && g.degree(perm[1]) < g.degree(*anchor)))) continue;
    ++states;
    VertexSet prefix;
    long long cost = 0;
    int cut = 0;
    for (Vertex v : perm) {
      cut += g.degree(v) - 2 * static_cast<int>(g.neighbors(v).intersection_size(prefix));
      prefix.insert(v);
      cost = obj == Objective::beta ? cost + cut : std::max<long long>(cost, cut);
    }
    if (cost < best) best = cost, witness = perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (witness.empty()) infeasible(g, *anchor);

  SolveResult r;
  r.objective = obj;
  r.mode = SolveMode::arrangement;
  r.value = best;
  r.arrangement = LinearArrangement(std::move(witness));
  r.anchor = anchor;
  r.stats = {states, elapsed_ms(t0)};
  return r;
}

void for_each_binary_tree(int n, const std::function<void(const std::vector<std::uint32_t>&)>& f) {
  if (n < 1) return;
  // Nodes 0..n-1 are leaves; internal nodes are appended as leaves get inserted.
  std::vector<int> left(2 * n - 1, -1), right(2 * n - 1, -1), parent(2 * n - 1, -1);
  std::vector<std::uint32_t> masks(2 * n - 1);
  int root = 0;

  auto fill_masks = [&](auto&& self, int x) -> std::uint32_t {
    if (x < n) return masks[x] = 1U << x;
    return masks[x] = self(self, left[x]) | self(self, right[x]);
  };
  auto insert = [&](auto&& self, int k) -> void {
    if (k == n) {
      fill_masks(fill_masks, root);
      f(masks);
      return;
    }
    std::vector<int> nodes;
    for (int x = 0; x < k; ++x) nodes.push_back(x);
    for (int x = n; x < n + k - 1; ++x) nodes.push_back(x);
    const int y = n + k - 1;
    for (int x : nodes) {
      int p = parent[x];
      left[y] = x, right[y] = k, parent[y] = p;
      parent[x] = y, parent[k] = y;
      if (p < 0) root = y;
      else (left[p] == x ? left[p] : right[p]) = y;
      self(self, k + 1);
      if (p < 0) root = x;
      else (left[p] == y ? left[p] : right[p]) = x;
      parent[x] = p, parent[k] = -1;
    }
  };
  insert(insert, 1);
}

ReassemblyTree tree_from_masks(const std::vector<std::uint32_t>& masks) {
  std::vector<VertexSet> clusters;
  VertexSet ground;
  for (std::uint32_t m : masks) {
    VertexSet s;
    for (std::uint32_t b = m; b; b &= b - 1) s.insert(std::countr_zero(b) + 1);
    ground |= s;
    clusters.push_back(std::move(s));
  }
  return ReassemblyTree::validate(ground, std::move(clusters));
}

SolveResult brute_force_binary_reassembling(const Graph& g, Objective obj) {
  auto t0 = Clock::now();
  const int n = g.n();
  if (n < 1) throw ValidationError("graph has no vertices");
  if (n > 8) throw LimitError("binary tree enumeration is limited to n <= 8, got " + std::to_string(n));
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u - 1] |= 1U << (e.v - 1);
    adj[e.v - 1] |= 1U << (e.u - 1);
  }
  std::vector<int> cut(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s < cut.size(); ++s) {
    int v = std::countr_zero(s);
    std::uint32_t rest = s & (s - 1);
    cut[s] = cut[rest] + std::popcount(adj[v]) - 2 * std::popcount(adj[v] & rest);
  }
  long long best = std::numeric_limits<long long>::max();
  std::vector<std::uint32_t> witness;
  long long trees = 0;
  for_each_binary_tree(n, [&](const std::vector<std::uint32_t>& masks) {
    ++trees;
    long long cost = 0;
    for (std::uint32_t m : masks) cost = obj == Objective::beta ? cost + cut[m] : std::max<long long>(cost, cut[m]);
    if (cost < best) best = cost, witness = masks;
  });
  SolveResult r;
  r.objective = obj;
  r.mode = SolveMode::binary_reassembling;
  r.value = best;
  r.tree = tree_from_masks(witness);
  r.stats = {trees, elapsed_ms(t0)};
  return r;
}

} // namespace reasm
