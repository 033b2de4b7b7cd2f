#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reasm/graph.hpp"
#include "reasm/linear_layout.hpp"
#include "reasm/reassembly_tree.hpp"
#include "reasm/solvers.hpp"

namespace reasm {

/// G glued at w to a clique on U ∪ {w}, U = {n+1, ..., n+p}, p = 2m.
struct AuxiliaryGraph {
  Graph base;
  Vertex w = 0;
  int p = 0;
  Graph combined;

  int n() const { return base.n(); }
  int size() const { return combined.n(); }
  bool in_clique(Vertex v) const { return v == w || v > base.n(); }
  bool in_u(Vertex v) const { return v > base.n(); }
};

AuxiliaryGraph build_auxiliary(const Graph& g, Vertex w);

/// An order of V_w with its per-prefix cut split into G-edges (r) and
/// clique edges (s).
struct VCSequence {
  std::vector<Vertex> order;
  std::vector<std::pair<int, int>> pairs; // (r_i, s_i) for prefixes i = 1..|V_w|

  long long beta() const;
};

VCSequence vc_sequence(const AuxiliaryGraph& a, std::vector<Vertex> order);

/// 0 when the clique vertices are consecutive, else the length of the
/// shorter outer clique run.
int scatter(const AuxiliaryGraph& a, const VCSequence& s);
int unbalance(const AuxiliaryGraph& a, const VCSequence& s);
/// True when every vertex of V - w sits left of w and all of U right of it.
bool left_balanced(const AuxiliaryGraph& a, const VCSequence& s);
bool right_balanced(const AuxiliaryGraph& a, const VCSequence& s);

/// Moves the first non-clique vertex after the leading clique run in front
/// of it, or the last one before the trailing run behind it, whichever run
/// is shorter (leading run on ties).
VCSequence descatter_move(const AuxiliaryGraph& a, const VCSequence& s);

/// One full case of the rebalancing argument on an unscattered sequence.
/// The result has unbalance 0.
VCSequence rebalance_move(const AuxiliaryGraph& a, const VCSequence& s);

/// Descatter to a fixpoint, rebalance, and orient as U, w, V - w.
VCSequence normalize_sequence(const AuxiliaryGraph& a, const VCSequence& s);

enum class BetaDirection { reassembling_to_arrangement, arrangement_to_reassembling };
BetaDirection parse_direction(std::string_view s); // "r2a" | "a2r"
std::string to_string(BetaDirection d);

struct AnchorOutcome {
  Vertex w = 0;
  long long beta = 0;     // on G, of the converted object
  long long aux_beta = 0; // inner optimum on G_w
  bool scatter0 = false;  // raw inner witness
  bool balanced = false;
};

struct BetaReduction {
  BetaDirection direction{};
  std::vector<AnchorOutcome> anchors;
  Vertex best_w = 0;
  long long best_beta = 0;
  std::optional<LinearArrangement> arrangement; // r2a
  std::optional<ReassemblyTree> tree;           // a2r
  bool scatter0 = true;
  bool balanced = true;
};

/// Solves G_w for `inner` problem; must be exact on the auxiliary graph.
using InnerSolver = std::function<SolveResult(const Graph&)>;

/// r2a: optimal arrangement of G from linear-reassembling optima of each
/// G_w. a2r: optimal linear reassembling of G from arrangement optima.
/// Anchors run on up to `jobs` threads; the result does not depend on it.
BetaReduction reduce_beta(const Graph& g, BetaDirection direction, const InnerSolver& inner = {}, int jobs = 1,
                          const SolverOptions& opts = {});

struct AlphaReduction {
  Deg3Report classification;
  bool direct = false; // every degree-3 vertex is a cut vertex
  LinearArrangement arrangement;
  int alpha = 0;
  std::optional<ReassemblyTree> tree; // the linear optimum, when used
};

/// Cutwidth-optimal arrangement of a connected graph with max degree <= 3.
AlphaReduction reduce_alpha(const Graph& g, const SolverOptions& opts = {});

ReassemblyTree alpha_reassembling_from_arrangement(const Graph& g, const LinearArrangement& phi);

} // namespace reasm
