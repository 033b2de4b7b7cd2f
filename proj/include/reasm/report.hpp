#pragma once

#include <json.hpp>

#include "reasm/linear_layout.hpp"
#include "reasm/reassembly_tree.hpp"
#include "reasm/reduction.hpp"
#include "reasm/sequential.hpp"
#include "reasm/solvers.hpp"

namespace reasm {

using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(const Edge& e);
Json to_json(const std::vector<Edge>& edges);

Json to_json(const MeasureReport& r, bool per_cluster = false);
Json to_json(const ArrangementReport& r, bool with_cuts = false);
Json to_json(const SequentialTrace& t, const ReassemblyTree& tree);
Json to_json(const SolveResult& r);
Json to_json(const BetaReduction& r);
Json to_json(const AlphaReduction& r);

} // namespace reasm
