#include "reasm/reduction.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "reasm/error.hpp"

namespace reasm {

AuxiliaryGraph build_auxiliary(const Graph& g, Vertex w) {
  if (!g.has_vertex(w)) throw ValidationError("vertex " + std::to_string(w) + " is not in the graph");
  if (!g.is_connected()) throw ValidationError("auxiliary graphs need a connected base graph");
  AuxiliaryGraph a;
  a.base = g;
  a.w = w;
  a.p = g.degree_sum();
  std::vector<Edge> edges = g.edges();
  const int n = g.n();
  for (Vertex u = n + 1; u <= n + a.p; ++u) {
    edges.emplace_back(w, u);
    for (Vertex x = u + 1; x <= n + a.p; ++x) edges.emplace_back(u, x);
  }
  a.combined = Graph(n + a.p, edges);
  return a;
}

long long VCSequence::beta() const {
  long long b = 0;
  for (auto [r, s] : pairs) b += r + s;
  return b;
}

VCSequence vc_sequence(const AuxiliaryGraph& a, std::vector<Vertex> order) {
  VertexSet seen;
  for (Vertex v : order) {
    if (v < 1 || v > a.size() || seen.contains(v))
      throw ValidationError("sequence is not a permutation of 1.." + std::to_string(a.size()));
    seen.insert(v);
  }
  if (static_cast<int>(order.size()) != a.size())
    throw ValidationError("sequence is not a permutation of 1.." + std::to_string(a.size()));

  VCSequence s;
  VertexSet prefix;
  int r = 0, sk = 0, clique_in_prefix = 0;
  for (Vertex v : order) {
    if (v <= a.n()) r += a.base.degree(v) - 2 * static_cast<int>(a.base.neighbors(v).intersection_size(prefix));
    if (a.in_clique(v)) {
      sk += a.p - 2 * clique_in_prefix;
      ++clique_in_prefix;
    }
    prefix.insert(v);
    s.pairs.emplace_back(r, sk);
  }
  s.order = std::move(order);
  return s;
}

namespace {

struct Runs {
  int i = -1, j = -1, k = -1, l = -1; // 0-based positions
  bool scattered = false;
};

Runs clique_runs(const AuxiliaryGraph& a, const std::vector<Vertex>& order) {
  Runs r;
  const int size = static_cast<int>(order.size());
  for (int x = 0; x < size && r.i < 0; ++x)
    if (a.in_clique(order[x])) r.i = x;
  for (int x = size - 1; x >= 0 && r.l < 0; --x)
    if (a.in_clique(order[x])) r.l = x;
  for (int x = r.i + 1; x < r.l && r.j < 0; ++x)
    if (!a.in_clique(order[x])) r.j = x;
  for (int x = r.l - 1; x > r.i && r.k < 0; --x)
    if (!a.in_clique(order[x])) r.k = x;
  r.scattered = r.j >= 0;
  return r;
}

struct Sides {
  int a_left = 0, a_right = 0, b_left = 0, b_right = 0;
};

Sides sides(const AuxiliaryGraph& a, const std::vector<Vertex>& order) {
  Sides s;
  bool right = false;
  for (Vertex v : order) {
    if (v == a.w) {
      right = true;
      continue;
    }
    int& slot = a.in_u(v) ? (right ? s.b_right : s.b_left) : (right ? s.a_right : s.a_left);
    ++slot;
  }
  return s;
}

} // namespace

int scatter(const AuxiliaryGraph& a, const VCSequence& s) {
  Runs r = clique_runs(a, s.order);
  return r.scattered ? std::min(r.j - r.i, r.l - r.k) : 0;
}

bool left_balanced(const AuxiliaryGraph& a, const VCSequence& s) {
  Sides d = sides(a, s.order);
  return d.a_left == a.n() - 1 && d.b_right == a.p;
}

bool right_balanced(const AuxiliaryGraph& a, const VCSequence& s) {
  Sides d = sides(a, s.order);
  return d.a_right == a.n() - 1 && d.b_left == a.p;
}

int unbalance(const AuxiliaryGraph& a, const VCSequence& s) {
  Sides d = sides(a, s.order);
  const int n = a.n();
  return std::min((n - d.a_left - 1) + (a.p - d.b_right), (n - d.a_right - 1) + (a.p - d.b_left));
}

VCSequence descatter_move(const AuxiliaryGraph& a, const VCSequence& s) {
  Runs r = clique_runs(a, s.order);
  if (!r.scattered) throw ValidationError("sequence is not scattered");
  std::vector<Vertex> out = s.order;
  if (r.j - r.i <= r.l - r.k) {
    Vertex x = out[r.j];
    out.erase(out.begin() + r.j);
    out.insert(out.begin() + r.i, x);
  } else {
    Vertex x = out[r.k];
    out.insert(out.begin() + r.l + 1, x);
    out.erase(out.begin() + r.k);
  }
  return vc_sequence(a, std::move(out));
}

VCSequence rebalance_move(const AuxiliaryGraph& a, const VCSequence& s) {
  if (scatter(a, s) != 0) throw ValidationError("rebalancing needs an unscattered sequence");
  if (unbalance(a, s) == 0) throw ValidationError("sequence is already balanced");
  Runs r = clique_runs(a, s.order);
  const auto begin = s.order.begin();
  std::vector<Vertex> left(begin, begin + r.i);
  std::vector<Vertex> run(begin + r.i, begin + r.l + 1);
  std::vector<Vertex> right(begin + r.l + 1, s.order.end());
  const int k = static_cast<int>(std::find(run.begin(), run.end(), a.w) - run.begin());
  const int p = a.p;

  bool to_front = k == 0;
  if (k != 0 && k != p) {
    // Cases (c)-(e): w goes to the end of the run facing more of its neighbours.
    const auto& nb = a.base.neighbors(a.w);
    int dl = 0, dr = 0;
    for (Vertex v : left) dl += nb.contains(v);
    for (Vertex v : right) dr += nb.contains(v);
    to_front = dl >= dr;
    std::swap(run[k], to_front ? run.front() : run.back());
  }
  std::vector<Vertex> out;
  if (to_front) {
    // Case (a): V - w, then w and U.
    out = left;
    out.insert(out.end(), right.begin(), right.end());
    out.insert(out.end(), run.begin(), run.end());
  } else {
    // Case (b): U and w, then V - w.
    out = run;
    out.insert(out.end(), left.begin(), left.end());
    out.insert(out.end(), right.begin(), right.end());
  }
  return vc_sequence(a, std::move(out));
}

VCSequence normalize_sequence(const AuxiliaryGraph& a, const VCSequence& s) {
  VCSequence cur = s;
  while (scatter(a, cur) > 0) cur = descatter_move(a, cur);
  if (unbalance(a, cur) > 0) cur = rebalance_move(a, cur);
  if (!right_balanced(a, cur)) {
    std::reverse(cur.order.begin(), cur.order.end());
    cur = vc_sequence(a, std::move(cur.order));
  }
  return cur;
}

BetaDirection parse_direction(std::string_view s) {
  if (s == "r2a") return BetaDirection::reassembling_to_arrangement;
  if (s == "a2r") return BetaDirection::arrangement_to_reassembling;
  throw ValidationError("direction must be r2a or a2r, got '" + std::string(s) + "'");
}

std::string to_string(BetaDirection d) {
  return d == BetaDirection::reassembling_to_arrangement ? "r2a" : "a2r";
}

namespace {

struct AnchorWork {
  AnchorOutcome outcome;
  std::optional<LinearArrangement> arrangement;
  std::optional<ReassemblyTree> tree;
};

AnchorWork solve_anchor(const Graph& g, Vertex w, BetaDirection dir, const InnerSolver& inner) {
  const bool r2a = dir == BetaDirection::reassembling_to_arrangement;
  AuxiliaryGraph aux = build_auxiliary(g, w);
  SolveResult res = inner(aux.combined);
  std::vector<Vertex> raw;
  if (r2a) {
    if (!res.tree || !res.tree->is_linear()) throw std::logic_error("inner solver did not return a linear tree");
    raw = linear_sequence(*res.tree);
  } else {
    if (!res.arrangement) throw std::logic_error("inner solver did not return an arrangement");
    raw = res.arrangement->order();
  }
  VCSequence seq = vc_sequence(aux, raw);

  AnchorWork out;
  out.outcome.w = w;
  out.outcome.aux_beta = res.value;
  out.outcome.scatter0 = scatter(aux, seq) == 0;
  out.outcome.balanced = unbalance(aux, seq) == 0;

  VCSequence norm = normalize_sequence(aux, seq);
  std::vector<Vertex> sigma;
  for (Vertex v : norm.order)
    if (v <= g.n()) sigma.push_back(v);
  if (r2a) {
    out.arrangement = induce_arrangement(g, linear_tree_of(sigma));
    out.outcome.beta = evaluate_arrangement(g, *out.arrangement).beta;
  } else {
    out.tree = induce_reassembling(g, LinearArrangement(sigma));
    out.outcome.beta = measures(g, *out.tree).beta;
  }
  return out;
}

} // namespace

BetaReduction reduce_beta(const Graph& g, BetaDirection direction, const InnerSolver& inner, int jobs,
                          const SolverOptions& opts) {
  if (!g.is_connected()) throw ValidationError("reduction needs a connected graph");
  InnerSolver solver = inner;
  if (!solver) {
    if (direction == BetaDirection::reassembling_to_arrangement)
      solver = [opts](const Graph& gw) { return exact_linear_reassembling(gw, Objective::beta, std::nullopt, opts); };
    else
      solver = [opts](const Graph& gw) { return exact_arrangement(gw, Objective::beta, std::nullopt, opts); };
  }

  const int n = g.n();
  std::vector<std::optional<AnchorWork>> work(n);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        work[i] = solve_anchor(g, i + 1, direction, solver);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int threads = std::clamp(jobs, 1, n);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  BetaReduction r;
  r.direction = direction;
  int best = -1;
  for (int i = 0; i < n; ++i) {
    const AnchorOutcome& o = work[i]->outcome;
    r.anchors.push_back(o);
    r.scatter0 = r.scatter0 && o.scatter0;
    r.balanced = r.balanced && o.balanced;
    // (beta, w) lexicographic; i ascends with w.
    if (best < 0 || o.beta < work[best]->outcome.beta) best = i;
  }
  r.best_w = work[best]->outcome.w;
  r.best_beta = work[best]->outcome.beta;
  r.arrangement = work[best]->arrangement;
  r.tree = work[best]->tree;
  return r;
}

AlphaReduction reduce_alpha(const Graph& g, const SolverOptions& opts) {
  if (!g.is_connected()) throw ValidationError("reduction needs a connected graph");
  AlphaReduction r;
  r.classification = classify_deg3(g);
  if (r.classification.max_degree > 3)
    throw ValidationError("alpha reduction needs max degree <= 3, got " + std::to_string(r.classification.max_degree));
  r.direct = r.classification.all_deg3_are_cut;
  if (r.direct) {
    r.arrangement = *exact_arrangement(g, Objective::alpha, std::nullopt, opts).arrangement;
  } else {
    r.tree = *exact_linear_reassembling(g, Objective::alpha, std::nullopt, opts).tree;
    r.arrangement = induce_arrangement(g, *r.tree);
  }
  r.alpha = evaluate_arrangement(g, r.arrangement).alpha;
  return r;
}

ReassemblyTree alpha_reassembling_from_arrangement(const Graph& g, const LinearArrangement& phi) {
  return induce_reassembling(g, phi);
}

} // namespace reasm
