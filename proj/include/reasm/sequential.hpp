#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "reasm/graph.hpp"
#include "reasm/reassembly_tree.hpp"

namespace reasm {

using EdgeOrdering = std::vector<Edge>;
/// n partitions from all singletons up to {V}; each step merges two blocks.
using PartitionChain = std::vector<Partition>;

struct MergeStep {
  VertexSet a, b;              // the merged blocks (a holds the trigger's smaller endpoint)
  Edge trigger;                // first remaining edge of the ordering
  std::vector<Edge> bridges;   // all edges between a and b, sorted
  std::vector<Edge> consumed;  // bridges dropped with the trigger, in ordering order
};

struct SequentialTrace {
  PartitionChain chain;
  std::vector<MergeStep> steps;
};

/// Reassembles g edge by edge: take the first remaining edge, merge its
/// endpoint blocks, drop every edge now inside one block.
SequentialTrace seq_reassemble(const Graph& g, const EdgeOrdering& ordering);

/// Binary tree whose clusters are every block seen along the chain.
ReassemblyTree bin(const Graph& g, const EdgeOrdering& ordering);

/// An ordering reproducing a strict chain: per merge, the bridges in edge
/// order.
EdgeOrdering chain_to_ordering(const Graph& g, const PartitionChain& chain);

/// Chain of cross-sections obtained by merging sibling pairs smallest
/// cluster first.
PartitionChain tree_chain(const ReassemblyTree& t);

/// Recursive canonical ordering of a strict tree: children's orderings
/// (smaller first edge first) followed by the sorted sibling bridges.
EdgeOrdering canonical_ordering(const Graph& g, const ReassemblyTree& t);

EdgeOrdering parse_ordering(std::string_view text);
std::string ordering_to_text(const EdgeOrdering& ordering);

} // namespace reasm
