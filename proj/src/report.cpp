// Copyright 2026 The hlink Authors
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

#include "hlink/report.hpp"

#include "hlink/generators.hpp"
#include "hlink/io.hpp"

namespace hlink {

namespace {

Json vertices(std::span<const Vertex> vs) { return Json(std::vector<Vertex>(vs.begin(), vs.end())); }

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(0, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("field '") + key + "': " + e.what());
  }
}

OrientedCycle cycle_from(const Json& j, const char* key) {
  auto vs = field<std::vector<Vertex>>(j, key);
  try {
    return OrientedCycle::unchecked(std::move(vs));
  } catch (const Error& e) {
    throw ParseError(0, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Json report_header(std::string_view command) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  return j;
}

Json to_json(const PathSeq& p) { return Json(p.vertices); }

Json to_json(const Subdivision& s) {
  Json routes = Json::array();
  for (const auto& r : s.routes) routes.push_back(to_json(r));
  return {{"placement", s.placement.images}, {"routes", routes}};
}

Json to_json(const LinkageResult& r) {
  Json j{{"status", to_string(r.status)}, {"complete", r.complete}, {"nodes_explored", r.nodes_explored}};
  j["subdivision"] = r.subdivision ? to_json(*r.subdivision) : Json(nullptr);
  return j;
}

Json to_json(const LinkedReport& r) {
  Json outcomes = Json::array();
  for (const auto& o : r.outcomes) {
    outcomes.push_back({{"placement", o.placement.images},
                        {"status", to_string(o.result.status)},
                        {"nodes_explored", o.result.nodes_explored}});
  }
  return {{"verdict", to_string(r.verdict)},
          {"placements", r.outcomes.size()},
          {"not_linked", r.not_linked},
          {"exhausted", r.exhausted},
          {"total_nodes", r.total_nodes},
          {"outcomes", outcomes}};
}

Json to_json(const GoodPaths& p) {
  Json paths = Json::array();
  for (const auto& q : p.paths) paths.push_back(to_json(q));
  return {{"count", p.count}, {"complete", p.complete}, {"nodes", p.nodes}, {"paths", paths}};
}

Json to_json(const MaderCertificate& c) {
  return {{"W", c.W}, {"Y", c.Y}, {"X", c.X}, {"k", c.k}, {"value", c.value()}};
}

Json to_json(const SeparatingPair& p) {
  return {{"C", vertices(p.C.vertices())}, {"u1", p.u1},           {"u2", p.u2},
          {"A", p.A},                      {"R1", to_json(p.R1)}, {"R2", to_json(p.R2)},
          {"total", p.total()}};
}

Json to_json(const Flower& f) {
  return {{"u", f.u},
          {"C1", vertices(f.C1.vertices())},
          {"C2", vertices(f.C2.vertices())},
          {"C3", vertices(f.C3.vertices())},
          {"P1", to_json(f.P1)},
          {"P2", to_json(f.P2)},
          {"P3", to_json(f.P3)}};
}

Json to_json(const RotationEmbedding& e) { return {{"rotation", e.rotation}, {"outer", e.outer}}; }

Json to_json(const ThreePlanarCertificate& c) {
  return {{"A", c.A}, {"terminals", c.terminals}, {"embedding", to_json(c.embedding)}};
}

Json to_json(const DischargeWitness& w) {
  if (w.kind == DischargeWitness::Kind::InteriorVertex) {
    return {{"kind", "interior-vertex"}, {"v", w.u}, {"degree", w.degree}};
  }
  return {{"kind", "outer-edge"}, {"edge", {w.u, w.v}}, {"degree_sum", w.degree}};
}

Json to_json(const InstanceRecord& r, bool timing) {
  Json j{{"id", r.id},
         {"seed", r.seed},
         {"graph_hash", r.graph_hash},
         {"n", r.n},
         {"kappa", r.kappa},
         {"placements", r.placements},
         {"passed_checks", r.linked},
         {"outcome", to_string(r.outcome)},
         {"falsification", r.falsification},
         {"nodes_explored", r.nodes}};
  if (timing) j["wall_seconds"] = r.seconds;
  j["detail"] = r.detail;
  return j;
}

Json to_json(const CampaignReport& r, bool timing) {
  const auto& c = r.config;
  Json j = report_header("verify");
  j["config"] = {{"theorem", c.theorem},
                 {"n", c.n},
                 {"count", c.count},
                 {"seed", c.seed},
                 {"budget", c.budget},
                 {"jobs", c.jobs},
                 {"pattern", c.pattern},
                 {"placements", c.placements},
                 {"generator", kGeneratorId},
                 {"graph_hash", kGraphHashId}};
  if (timing) j["config"]["threads"] = r.threads;
  Json inst = Json::array();
  for (const auto& rec : r.instances) inst.push_back(to_json(rec, timing));
  j["instances"] = inst;
  const auto& s = r.summary;
  j["summary"] = {{"passed", s.passed},         {"failed", s.failed}, {"exhausted", s.exhausted},
                  {"skipped", s.skipped},       {"errors", s.errors},
                  {"falsifications", s.falsifications}};
  j["exit_code"] = r.exit_code();
  return j;
}

Subdivision subdivision_from_json(const Json& j) {
  Subdivision s;
  s.placement.images = field<std::vector<Vertex>>(j, "placement");
  for (auto& r : field<std::vector<std::vector<Vertex>>>(j, "routes")) s.routes.push_back({std::move(r)});
  return s;
}

Flower flower_from_json(const Json& j) {
  Flower f;
  f.u = field<std::array<Vertex, 4>>(j, "u");
  f.C1 = cycle_from(j, "C1");
  f.C2 = cycle_from(j, "C2");
  f.C3 = cycle_from(j, "C3");
  f.P1 = {field<std::vector<Vertex>>(j, "P1")};
  f.P2 = {field<std::vector<Vertex>>(j, "P2")};
  f.P3 = {field<std::vector<Vertex>>(j, "P3")};
  return f;
}

RotationEmbedding embedding_from_json(const Json& j) {
  return {field<std::vector<std::vector<Vertex>>>(j, "rotation"), field<std::vector<Vertex>>(j, "outer")};
}

ThreePlanarCertificate certificate_from_json(const Json& j) {
  ThreePlanarCertificate c;
  c.A = field<std::vector<std::vector<Vertex>>>(j, "A");
  c.terminals = field<std::vector<Vertex>>(j, "terminals");
  c.embedding = embedding_from_json(field<Json>(j, "embedding"));
  return c;
}

}  // namespace hlink
