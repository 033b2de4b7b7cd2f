#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reasm/graph.hpp"
#include "reasm/linear_layout.hpp"
#include "reasm/reassembly_tree.hpp"

namespace reasm {

enum class Objective { alpha, beta };
enum class SolveMode { arrangement, linear_reassembling, binary_reassembling };

std::string to_string(Objective o);
std::string to_string(SolveMode m);
Objective parse_objective(std::string_view s);

struct SolveStats {
  long long states = 0;
  long long millis = 0;
};

struct SolveResult {
  Objective objective = Objective::beta;
  SolveMode mode = SolveMode::arrangement;
  long long value = 0;
  std::optional<LinearArrangement> arrangement; // arrangement mode
  std::optional<ReassemblyTree> tree;           // reassembling modes
  std::optional<Vertex> anchor;
  SolveStats stats;

  std::string witness_text() const;
};

struct SolverOptions {
  int dp_limit = default_dp_limit();
  /// REASM_DP_LIMIT when set to a positive integer, else 24.
  static int default_dp_limit();
};

/// Subset DP over prefix sets. Ties resolve to the lexicographically least
/// optimal vertex sequence.
SolveResult exact_arrangement(const Graph& g, Objective obj, std::optional<Vertex> anchor = std::nullopt,
                              const SolverOptions& opts = {});

/// Optimum over linear trees (anchored at `anchor` when given), derived from
/// the anchored arrangement DP.
SolveResult exact_linear_reassembling(const Graph& g, Objective obj, std::optional<Vertex> anchor = std::nullopt,
                                      const SolverOptions& opts = {});

/// n! scan, n <= 10.
SolveResult brute_force_arrangement(const Graph& g, Objective obj, std::optional<Vertex> anchor = std::nullopt);

/// Every binary tree over V, n <= 8.
SolveResult brute_force_binary_reassembling(const Graph& g, Objective obj);

/// Calls f once per unordered binary tree over leaves 0..n-1 with the 2n-1
/// cluster bitmasks (bit i = vertex i+1). Trees are generated by inserting
/// leaf k next to any node of a tree over 0..k-1, so each appears once.
void for_each_binary_tree(int n, const std::function<void(const std::vector<std::uint32_t>&)>& f);

ReassemblyTree tree_from_masks(const std::vector<std::uint32_t>& masks);

} // namespace reasm
