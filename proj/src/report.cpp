#include "reasm/report.hpp"

namespace reasm {

Json to_json(const VertexSet& s) { return s.to_vector(); }

Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json to_json(const std::vector<Edge>& edges) {
  Json a = Json::array();
  for (const Edge& e : edges) a.push_back(to_json(e));
  return a;
}

Json to_json(const MeasureReport& r, bool per_cluster) {
  Json j{{"alpha", r.alpha}, {"beta", r.beta}};
  if (per_cluster) {
    Json cs = Json::array();
    for (const auto& c : r.per_cluster) cs.push_back({{"set", to_json(c.set)}, {"degree", c.degree}});
    j["clusters"] = std::move(cs);
  }
  return j;
}

Json to_json(const ArrangementReport& r, bool with_cuts) {
  Json j{{"alpha", r.alpha}, {"beta", r.beta}, {"gamma", r.gamma}};
  if (with_cuts) j["cuts"] = r.cuts;
  return j;
}

Json to_json(const SequentialTrace& t, const ReassemblyTree& tree) {
  Json steps = Json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"merged", Json::array({to_json(s.a), to_json(s.b)})},
                     {"trigger", to_json(s.trigger)},
                     {"bridges", to_json(s.bridges)},
                     {"consumed", to_json(s.consumed)}});
  return {{"steps", std::move(steps)}, {"tree", tree.to_text()}};
}

Json to_json(const SolveResult& r) {
  return {{"objective", to_string(r.objective)},
          {"mode", to_string(r.mode)},
          {"value", r.value},
          {"witness", r.witness_text()},
          {"anchor", r.anchor ? Json(*r.anchor) : Json(nullptr)},
          {"stats", {{"states", r.stats.states}, {"millis", r.stats.millis}}}};
}

Json to_json(const BetaReduction& r) {
  Json anchors = Json::array();
  for (const auto& a : r.anchors) anchors.push_back({{"w", a.w}, {"beta", a.beta}});
  std::string object = r.arrangement ? r.arrangement->to_text() : r.tree ? r.tree->to_text() : "";
  return {{"anchors", std::move(anchors)},
          {"best", {{"w", r.best_w}, {"beta", r.best_beta}, {"object", object}}},
          {"checks", {{"scatter0", r.scatter0}, {"balanced", r.balanced}}}};
}

Json to_json(const AlphaReduction& r) {
  const auto& c = r.classification;
  Json j{{"classification",
          {{"max_degree", c.max_degree},
           {"all_deg3_are_cut", c.all_deg3_are_cut},
           {"noncut_deg3", c.noncut_deg3_witness ? Json(*c.noncut_deg3_witness) : Json(nullptr)}}},
         {"branch", r.direct ? "all degree-3 vertices are cut vertices" : "non-cut degree-3 vertex"},
         {"best", {{"alpha", r.alpha}, {"object", r.arrangement.to_text()}}}};
  if (r.tree) j["tree"] = r.tree->to_text();
  return j;
}

} // namespace reasm
