#include "reasm/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "reasm/error.hpp"
#include "reasm/solvers.hpp"

namespace reasm::enumerate {

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 7) throw LimitError("graph enumeration supports 1 <= n <= 7");
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  const int k = static_cast<int>(slots.size());
  std::vector<std::vector<int>> slot_index(n, std::vector<int>(n));
  for (int s = 0; s < k; ++s) {
    slot_index[slots[s].first][slots[s].second] = s;
    slot_index[slots[s].second][slots[s].first] = s;
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint32_t> seen;
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    std::uint32_t best = mask;
    for (const auto& p : perms) {
      std::uint32_t image = 0;
      for (std::uint32_t b = mask; b; b &= b - 1) {
        auto [x, y] = slots[std::countr_zero(b)];
        image |= std::uint32_t{1} << slot_index[p[x]][p[y]];
      }
      best = std::min(best, image);
      if (best < mask) break; // not canonical
    }
    if (best != mask) continue;
    std::vector<Edge> edges;
    for (std::uint32_t b = mask; b; b &= b - 1) {
      auto [x, y] = slots[std::countr_zero(b)];
      edges.emplace_back(x + 1, y + 1);
    }
    Graph g(n, edges);
    if (g.is_connected() && seen.insert(mask).second) out.push_back(std::move(g));
  }
  return out;
}

Graph random_graph(int n, double q, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(q);
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph random_connected_graph(int n, double q, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(q);
  std::vector<Edge> edges;
  for (Vertex v = 2; v <= n; ++v) {
    std::uniform_int_distribution<Vertex> pick(1, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  return Graph(n, edges);
}

LinearArrangement random_arrangement(int n, std::mt19937_64& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  return LinearArrangement(std::move(order));
}

void for_each_linear_tree(int n, const std::function<void(const ReassemblyTree&)>& f) {
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), 1);
  do {
    // The two deepest leaves are unordered.
    if (n >= 2 && seq[0] > seq[1]) continue;
    f(linear_tree_of(seq));
  } while (std::next_permutation(seq.begin(), seq.end()));
}

void for_each_strict_tree(const Graph& g, const std::function<void(const ReassemblyTree&)>& f) {
  for_each_binary_tree(g.n(), [&](const std::vector<std::uint32_t>& masks) {
    ReassemblyTree t = tree_from_masks(masks);
    if (is_strict(g, t).strict) f(t);
  });
}

} // namespace reasm::enumerate
