#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "reasm/graph.hpp"
#include "reasm/linear_layout.hpp"
#include "reasm/reassembly_tree.hpp"

namespace reasm::enumerate {

/// One representative per isomorphism class of connected graphs on n <= 7
/// vertices (canonical form: least edge bitmask over all relabelings).
std::vector<Graph> connected_graphs(int n);

/// G(n, q) random graph; may be disconnected.
Graph random_graph(int n, double q, std::mt19937_64& rng);
/// Random spanning tree plus G(n, q) extra edges.
Graph random_connected_graph(int n, double q, std::mt19937_64& rng);
LinearArrangement random_arrangement(int n, std::mt19937_64& rng);

/// Every linear tree over 1..n, each once.
void for_each_linear_tree(int n, const std::function<void(const ReassemblyTree&)>& f);
/// Every binary tree over 1..n that is strict for g.
void for_each_strict_tree(const Graph& g, const std::function<void(const ReassemblyTree&)>& f);

} // namespace reasm::enumerate
