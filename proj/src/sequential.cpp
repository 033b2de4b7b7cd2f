#include "reasm/sequential.hpp"

#include <algorithm>
#include <sstream>

#include "reasm/error.hpp"

namespace reasm {

namespace {

void require_permutation(const Graph& g, const EdgeOrdering& ordering) {
  EdgeOrdering sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != g.edges())
    throw ValidationError("edge ordering is not a permutation of the graph's " + std::to_string(g.m()) +
                          " edges");
}

Partition sorted_partition(std::vector<VertexSet> blocks) {
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

} // namespace

SequentialTrace seq_reassemble(const Graph& g, const EdgeOrdering& ordering) {
  require_permutation(g, ordering);
  if (!g.is_connected()) throw ValidationError("sequential reassembling requires a connected graph");

  std::vector<VertexSet> blocks;
  std::vector<int> block_of(g.n() + 1);
  for (Vertex v = 1; v <= g.n(); ++v) {
    block_of[v] = static_cast<int>(blocks.size());
    blocks.push_back(VertexSet{v});
  }
  std::vector<bool> alive(blocks.size(), true);
  auto snapshot = [&] {
    std::vector<VertexSet> current;
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (alive[i]) current.push_back(blocks[i]);
    return sorted_partition(std::move(current));
  };

  SequentialTrace trace;
  trace.chain.push_back(snapshot());
  std::vector<bool> removed(ordering.size(), false);
  for (std::size_t head = 0; head < ordering.size(); ++head) {
    if (removed[head]) continue;
    const Edge e = ordering[head];
    int ia = block_of[e.u], ib = block_of[e.v];
    MergeStep step;
    step.a = blocks[ia];
    step.b = blocks[ib];
    step.trigger = e;
    step.bridges = g.bridges(step.a, step.b);

    blocks[ia] |= blocks[ib];
    alive[ib] = false;
    blocks[ib].for_each([&](Vertex v) { block_of[v] = ia; });
    removed[head] = true;
    for (std::size_t k = head + 1; k < ordering.size(); ++k) {
      if (removed[k]) continue;
      if (block_of[ordering[k].u] == ia && block_of[ordering[k].v] == ia) {
        removed[k] = true;
        step.consumed.push_back(ordering[k]);
      }
    }
    trace.steps.push_back(std::move(step));
    trace.chain.push_back(snapshot());
  }
  return trace;
}

ReassemblyTree bin(const Graph& g, const EdgeOrdering& ordering) {
  auto trace = seq_reassemble(g, ordering);
  std::vector<VertexSet> clusters;
  for (const auto& p : trace.chain) clusters.insert(clusters.end(), p.begin(), p.end());
  return ReassemblyTree::validate(g.vertices(), std::move(clusters));
}

EdgeOrdering chain_to_ordering(const Graph& g, const PartitionChain& chain) {
  const auto n = static_cast<std::size_t>(g.n());
  if (chain.size() != n) throw ValidationError("a maximal chain has exactly n = " + std::to_string(n) + " partitions");
  Partition finest;
  for (Vertex v = 1; v <= g.n(); ++v) finest.push_back(VertexSet{v});
  if (sorted_partition(chain.front()) != finest) throw ValidationError("chain must start with all singletons");
  if (chain.back().size() != 1 || chain.back().front() != g.vertices())
    throw ValidationError("chain must end with the single block V");

  EdgeOrdering out;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    Partition cur = sorted_partition(chain[i]);
    Partition next = sorted_partition(chain[i + 1]);
    if (next.size() + 1 != cur.size()) throw ValidationError("chain step " + std::to_string(i + 1) + " does not merge two blocks");
    std::vector<VertexSet> gone, fresh;
    std::set_difference(cur.begin(), cur.end(), next.begin(), next.end(), std::back_inserter(gone));
    std::set_difference(next.begin(), next.end(), cur.begin(), cur.end(), std::back_inserter(fresh));
    if (gone.size() != 2 || fresh.size() != 1 || (gone[0] | gone[1]) != fresh[0])
      throw ValidationError("chain step " + std::to_string(i + 1) + " does not merge two blocks");
    auto bridges = g.bridges(gone[0], gone[1]);
    if (bridges.empty())
      throw ValidationError("chain is not strict: merging " + gone[0].to_string() + " and " + gone[1].to_string() +
                            " has no bridge");
    out.insert(out.end(), bridges.begin(), bridges.end());
  }
  return out;
}

PartitionChain tree_chain(const ReassemblyTree& t) {
  std::vector<int> internal;
  for (int i = 0; i < t.cluster_count(); ++i)
    if (!t.is_leaf(i)) internal.push_back(i);
  std::sort(internal.begin(), internal.end(), [&](int a, int b) {
    const auto& x = t.clusters()[a];
    const auto& y = t.clusters()[b];
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  Partition cur;
  t.ground_set().for_each([&](Vertex v) { cur.push_back(VertexSet{v}); });
  PartitionChain chain{cur};
  for (int i : internal) {
    auto [a, b] = t.children(i);
    std::erase(cur, t.clusters()[a]);
    std::erase(cur, t.clusters()[b]);
    cur.push_back(t.clusters()[i]);
    chain.push_back(sorted_partition(cur));
  }
  return chain;
}

namespace {

EdgeOrdering canonical_of(const Graph& g, const ReassemblyTree& t, int node) {
  auto [a, b] = t.children(node);
  if (a == ReassemblyTree::kNone) return {};
  EdgeOrdering left = canonical_of(g, t, a);
  EdgeOrdering right = canonical_of(g, t, b);
  // Empty orderings (singletons) go first; otherwise compare first edges.
  if ((right.empty() && !left.empty()) || (!right.empty() && !left.empty() && right.front() < left.front()))
    std::swap(left, right);
  auto bridges = g.bridges(t.clusters()[a], t.clusters()[b]);
  if (bridges.empty())
    throw ValidationError("tree is not strict: siblings " + t.clusters()[a].to_string() + " and " +
                          t.clusters()[b].to_string() + " share no edge");
  left.insert(left.end(), right.begin(), right.end());
  left.insert(left.end(), bridges.begin(), bridges.end());
  return left;
}

} // namespace

EdgeOrdering canonical_ordering(const Graph& g, const ReassemblyTree& t) {
  require_ground_set(g, t);
  return canonical_of(g, t, t.root());
}

EdgeOrdering parse_ordering(std::string_view text) {
  EdgeOrdering out;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long a = 0, b = 0;
    std::string rest;
    if (!(ls >> a >> b) || (ls >> rest)) throw ValidationError("expected 'u v'", lineno);
    if (a == b) throw ValidationError("self-loop in ordering", lineno);
    out.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return out;
}

std::string ordering_to_text(const EdgeOrdering& ordering) {
  std::string s;
  for (const Edge& e : ordering) s += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return s;
}

} // namespace reasm
