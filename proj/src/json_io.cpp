// Copyright 2026 The cmt-bigraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cmt/json_io.hpp"

#include "cmt/construct.hpp"

namespace cmt {

Json to_json(const BipartiteGraph& g, const CmtClassification& c) {
  Json j;
  j["unmixed"] = c.unmixed();
  if (!c.unmixed()) return j;
  const UnmixedStructure& s = *c.structure;
  j["d"] = s.d;
  j["dimension"] = s.dimension();
  j["block_sizes"] = s.block_sizes;
  j["n_min"] = s.n_min ? Json(*s.n_min) : Json(nullptr);
  j["t_sharp"] = s.t_sharp;
  j["buchsbaum"] = s.buchsbaum();
  j["cohen_macaulay"] = s.cohen_macaulay();
  if (s.macaulay_order) {
    Json order = Json::array();
    for (std::size_t i : s.macaulay_order->order) order.push_back(i + 1);
    j["macaulay_order"] = order;
  }
  Json pairs = Json::array();
  for (const auto& p : s.pure_order.pairs) {
    pairs.push_back({g.left()[p.left], g.right()[p.right]});
  }
  j["pure_order"] = pairs;
  Json blocks = Json::array();
  for (const auto& b : s.blocks.blocks) {
    Json members = Json::array();
    for (std::size_t i : b) members.push_back(i + 1);
    blocks.push_back(members);
  }
  j["blocks"] = blocks;
  Json minimal = Json::array();
  for (std::size_t b : s.minimal_blocks) minimal.push_back(b + 1);
  j["minimal_blocks"] = minimal;
  return j;
}

Json facets_to_json(const SimplicialComplex& c) {
  Json out = Json::array();
  for (const auto& facet : c.facet_sets()) {
    out.push_back(Json(std::vector<std::string>(facet.begin(), facet.end())));
  }
  return out;
}

Json to_json(const HomologyProfile& h) {
  return Json{{"from_dimension", -1}, {"betti", h.betti}};
}

const char* to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::kAgree:
      return "agree";
    case VerifyStatus::kDisagree:
      return "disagree";
    case VerifyStatus::kOutsideHypothesis:
      return "outside_hypothesis";
  }
  return "unknown";
}

Json to_json(const OracleReport& r) {
  Json j;
  j["status"] = to_string(r.status);
  j["oracle_pure"] = r.oracle_pure;
  j["oracle_dimension"] = r.oracle_dimension;
  j["oracle_codim"] = r.oracle_codim ? Json(*r.oracle_codim) : Json(nullptr);
  j["oracle_codim_recursive"] =
      r.oracle_codim_recursive ? Json(*r.oracle_codim_recursive) : Json(nullptr);
  if (r.structural) {
    const auto& c = *r.structural;
    j["unmixed"] = c.unmixed();
    j["t_sharp"] = c.unmixed() ? Json(c.structure->t_sharp) : Json(nullptr);
  }
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

Json to_json(const SharpCmtEntry& e) {
  Json j;
  j["code"] = e.code.to_string();
  j["connected"] = e.connected;
  j["parametric"] = e.parametric;
  j["base_dimension"] = static_cast<int>(e.expansion.order.d()) - 1;
  j["multiplicities"] = e.expansion.multiplicities;
  j["vertices"] = e.graph.vertex_count();
  return j;
}

Json to_json(const UnmixedVerification& v) {
  Json j;
  j["d"] = v.d;
  j["instances"] = v.instances;
  j["disagreements"] = v.disagreements.size();
  Json cases = Json::array();
  for (const auto& [g, r] : v.disagreements) {
    Json c = to_json(r);
    c["graph"] = format_graph(g);
    cases.push_back(c);
  }
  j["counterexamples"] = cases;
  return j;
}

Json oracle_to_json(const SimplicialComplex& c, int max_t) {
  Json j;
  j["vertices"] = c.vertices().size();
  j["facet_count"] = c.facets().size();
  j["dimension"] = dim(c);
  j["pure"] = is_pure(c);
  j["homology"] = to_json(reduced_homology(c));
  const auto codim = cm_codim(c);
  j["cm_codim"] = codim ? Json(*codim) : Json(nullptr);
  const auto recursive = cm_codim_recursive(c);
  j["cm_codim_recursive"] = recursive ? Json(*recursive) : Json(nullptr);
  if (max_t >= 0) {
    Json rows = Json::array();
    for (int t = 0; t <= max_t; ++t) rows.push_back({{"t", t}, {"holds", is_cm_t(c, t)}});
    j["cm_t"] = rows;
  }
  j["facets"] = facets_to_json(c);
  return j;
}

Json to_json(const BaseDimensionSummary& s) {
  return Json{{"base_dimension", s.base_dimension},
              {"candidates", s.candidates},
              {"graphs", s.graphs},
              {"connected", s.connected}};
}

}  // namespace cmt
