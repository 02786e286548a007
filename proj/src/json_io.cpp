// Copyright 2026 The kappalab Authors
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

#include "kappalab/json_io.hpp"

namespace kappalab {

namespace {

Json labels_json(const CayleyGraph& g, std::span<const Vertex> vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(g.label(v).to_string());
  return out;
}

Json findings_json(const std::vector<Finding>& list) {
  Json out = Json::array();
  for (const auto& f : list) {
    out.push_back({{"clause", f.clause}, {"input", f.input}, {"observed", f.observed}});
  }
  return out;
}

Json head(const CayleyGraph& g) {
  return {{"family", family_name(g.family())}, {"n", g.n()}};
}

}  // namespace

Json graph_json(const CayleyGraph& g) {
  Json j = head(g);
  Json vertices = Json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.label(v).to_string());
  Json edges = Json::array();
  for (const auto& [u, v] : g.graph().edges()) edges.push_back({u, v});
  j["vertices"] = std::move(vertices);
  j["edges"] = std::move(edges);
  return j;
}

Json components_json(const CayleyGraph& g, const ComponentReport& report) {
  Json comps = Json::array();
  for (std::size_t i = 0; i < report.components.size(); ++i) {
    comps.push_back({{"size", report.components[i].size()},
                     {"shape", shape_name(report.shapes[i].kind)},
                     {"vertices", labels_json(g, report.components[i])}});
  }
  return {{"fault", report.fault}, {"count", report.count()}, {"components", std::move(comps)}};
}

Json kappa_json(const CayleyGraph& g, const KappaResult& result) {
  Json j = head(g);
  j["ell"] = result.ell;
  j["value"] = result.status == SearchStatus::Found ? Json(result.value) : Json(nullptr);
  j["tier"] = tier_name(result.tier);
  j["status"] = status_name(result.status);
  j["settled_below"] = result.settled_below;
  if (result.witness) {
    j["witness"] = {{"fault", labels_json(g, result.witness->fault.members())},
                    {"components", components_json(g, result.witness->report)["components"]}};
  } else {
    j["witness"] = nullptr;
  }
  if (result.family) {
    Json parts = Json::array();
    for (const auto& part : result.family->parts) parts.push_back(labels_json(g, part));
    j["parts"] = std::move(parts);
  }
  j["explored"] = result.explored;
  j["budget"] = result.budget;
  return j;
}

Json construction_json(const CayleyGraph& g, int ell, const ConstructedCut& cut) {
  Json j = head(g);
  j["ell"] = ell;
  j["value"] = cut.witness.fault.size();
  j["formula"] = cut.formula;
  j["tier"] = tier_name(Tier::WitnessUpperBound);
  j["status"] = status_name(SearchStatus::Found);
  Json parts = Json::array();
  for (const auto& part : cut.family.parts) parts.push_back(labels_json(g, part));
  j["parts"] = std::move(parts);
  j["witness"] = {{"fault", labels_json(g, cut.witness.fault.members())},
                  {"components", components_json(g, cut.witness.report)["components"]}};
  return j;
}

Json cut_verdict_json(const CayleyGraph& g, int ell, const CutVerdict& verdict) {
  Json j = head(g);
  j["ell"] = ell;
  j["accepted"] = verdict.accepted;
  j["fault"] = labels_json(g, verdict.report.fault);
  j["count"] = verdict.report.count();
  j["components"] = components_json(g, verdict.report)["components"];
  return j;
}

Json hyper_json(const CayleyGraph& g, const HyperScanReport& report) {
  Json j = head(g);
  j["connectivity"] = report.connectivity;
  j["complete"] = report.complete;
  j["scanned"] = report.scanned;
  j["disconnecting"] = report.disconnecting;
  j["singleton_cuts"] = report.singleton_cuts;
  j["counterexample_count"] = report.counterexample_count;
  j["hyper_connected"] = report.complete ? Json(report.hyper_connected) : Json(nullptr);
  Json list = Json::array();
  for (const auto& cr : report.counterexamples) {
    list.push_back({{"fault", labels_json(g, cr.fault)},
                    {"components", components_json(g, cr)["components"]}});
  }
  j["counterexamples"] = std::move(list);
  return j;
}

Json census_json(const CayleyGraph& g, int size, int min_components, const CutCensus& census) {
  Json j = head(g);
  j["size"] = size;
  j["min_components"] = min_components;
  j["complete"] = census.complete;
  j["scanned"] = census.scanned;
  j["count"] = census.cuts.size();
  Json list = Json::array();
  for (const auto& cr : census.cuts) {
    list.push_back({{"fault", labels_json(g, cr.fault)},
                    {"components", components_json(g, cr)["components"]}});
  }
  j["cuts"] = std::move(list);
  return j;
}

Json report_json(const VerificationReport& report) {
  Json j;
  j["lemma_id"] = report.lemma_id;
  j["family"] = family_name(report.family);
  j["n"] = report.n;
  j["mode"] = mode_name(report.mode.kind);
  const bool random = report.mode.kind == ModeKind::Sampled ||
                      report.mode.kind == ModeKind::Targeted;
  j["trials"] = random ? Json(report.mode.trials) : Json(nullptr);
  j["seed"] = random ? Json(report.mode.seed) : Json(nullptr);
  if (report.mode.kind == ModeKind::Skipped) j["reason"] = report.mode.reason;
  j["instances_checked"] = report.instances_checked;
  j["min_attained"] = report.min_attained ? Json(*report.min_attained) : Json(nullptr);
  j["verdict"] = report.verdict();
  j["violation_count"] = report.violation_count;
  j["violations"] = findings_json(report.violations);
  j["exceptions"] = findings_json(report.exceptions);
  Json stats = Json::object();
  for (const auto& [k, v] : report.stats) stats[k] = v;
  j["stats"] = std::move(stats);
  j["notes"] = report.notes;
  return j;
}

Json envelope(std::string_view command, const Json& body) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

std::string to_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace kappalab
