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

#include <set>

#include "doctest.h"
#include "hlink/campaign.hpp"
#include "hlink/connectivity.hpp"
#include "hlink/report.hpp"

using namespace hlink;

namespace {

CampaignConfig config(const std::string& id, int n, int count, std::uint64_t seed) {
  CampaignConfig c;
  c.theorem = id;
  c.n = n;
  c.count = count;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("campaign reports replay identically across thread counts") {
  const CampaignConfig cases[] = {config("thm1.2", 9, 6, 11),  config("sharpness", 0, 40, 0),
                                  config("thm2.1", 5, 20, 12), config("thm5.2", 11, 2, 13),
                                  config("thm1.3", 10, 3, 14), config("lemma3.1", 9, 40, 15),
                                  config("lemma3.3", 12, 10, 16)};
  for (auto c : cases) {
    CAPTURE(c.theorem);
    auto serial = run_campaign_serial(c);
    c.jobs = 3;
    auto parallel = run_campaign(c);
    auto again = run_campaign(c);
    auto a = to_json(serial, false), b = to_json(parallel, false), d = to_json(again, false);
    a["config"]["jobs"] = b["config"]["jobs"];
    CHECK(a == b);
    CHECK(b == d);
    CHECK(serial.exit_code() == 0);
    CHECK(serial.summary.falsifications == 0);
    for (std::size_t i = 0; i < serial.instances.size(); ++i) CHECK(serial.instances[i].id == i);
  }
}

TEST_CASE("campaign instances are pure in seed and id") {
  auto c = config("thm1.2", 10, 4, 99);
  auto r1 = run_instance(c, 2);
  auto r2 = run_instance(c, 2);
  CHECK(r1.graph_hash == r2.graph_hash);
  CHECK(r1.nodes == r2.nodes);
  CHECK(r1.seed == derive_seed(99, 2));
  CHECK(run_instance(c, 3).seed != r1.seed);
  CHECK(r1.kappa >= 4);
}

TEST_CASE("sharpness cases") {
  auto cases = sharpness_cases();
  std::set<std::array<int, 4>> expect;
  for (int k1 = 1; k1 <= 5; ++k1)
    for (int k2 = 1; k2 <= 5; ++k2)
      for (int k3 = 0; k3 <= 5; ++k3)
        for (int m = 1; m <= 2; ++m)
          if (k1 + k2 + k3 >= 3 && k1 + k2 + k3 <= 5) expect.insert({k1, k2, k3, m});
  CHECK(std::set<std::array<int, 4>>(cases.begin(), cases.end()) == expect);
  CHECK(cases.size() == 38);
  auto rep = run_campaign(config("sharpness", 0, 1000, 0));
  CHECK(rep.instances.size() == 38);
  CHECK(rep.summary.passed == 38);
}

TEST_CASE("exit codes follow the summary") {
  CampaignReport r;
  CHECK(r.exit_code() == 0);
  r.summary.exhausted = 1;
  CHECK(r.exit_code() == 3);
  r.summary.failed = 1;
  CHECK(r.exit_code() == 1);
  r.summary = {};
  r.summary.falsifications = 1;
  CHECK(r.exit_code() == 1);
  r.summary = {};
  r.summary.errors = 1;
  CHECK(r.exit_code() == 1);
}

TEST_CASE("budget exhaustion is its own outcome") {
  auto c = config("thm1.3", 11, 2, 5);
  c.budget = 1;
  auto rep = run_campaign_serial(c);
  CHECK(rep.summary.failed == 0);
  CHECK(rep.summary.exhausted + rep.summary.passed == 2);
  if (rep.summary.exhausted > 0) CHECK(rep.exit_code() == 3);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(check_config(config("thm9", 5, 1, 1)), Error);
  CHECK_THROWS_AS(check_config(config("thm2.1", 30, 1, 1)), Error);
  CHECK_THROWS_AS(check_config(config("lemma3.3", 3, 1, 1)), Error);
  auto c = config("thm1.2", 8, 1, 1);
  c.pattern = "kite";
  CHECK_THROWS_AS(check_config(c), Error);
  c.pattern = "F(4,3,2)";
  CHECK_THROWS_AS(check_config(c), Error);
  c = config("thm1.2", 8, 1, 1);
  c.budget = 0;
  try {
    check_config(c);
    FAIL("expected BudgetNonPositive");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetNonPositive);
  }
  CHECK_NOTHROW(check_config(config("thm1.2", 8, 1, 1)));
}

TEST_CASE("separating-pair instances have shortest cycles") {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    auto in = random_connsep_instance(rng, 9);
    CHECK(in.c.size() >= 4);
    CHECK(in.c.size() <= 9);
    CHECK(in.c.is_cycle_in(in.g));
    CHECK(is_shortest_cycle_through(in.g, in.c, in.u1, in.u2));
    CHECK(in.u1 != in.u2);
    VertexMask off(static_cast<std::size_t>(in.g.order()), 1);
    for (Vertex a : in.A) off[a] = 0;
    CHECK(is_connected(in.g, &off));
  }
}

TEST_CASE("report schema and fields") {
  auto rep = run_campaign(config("lemma3.3", 10, 3, 2));
  auto j = to_json(rep);
  CHECK(j["schema"] == "hlink-report/1");
  CHECK(j["command"] == "verify");
  CHECK(j["config"]["generator"] == std::string(kGeneratorId));
  CHECK(j["instances"].size() == 3);
  CHECK(j["instances"][0].contains("wall_seconds"));
  CHECK_FALSE(to_json(rep, false)["instances"][0].contains("wall_seconds"));
  CHECK(j["summary"]["passed"] == 3);
  CHECK(j["exit_code"] == 0);
  auto keys = {"id", "seed", "graph_hash", "n", "kappa", "placements", "outcome", "nodes_explored"};
  for (const char* k : keys) CHECK(j["instances"][1].contains(k));
}

TEST_CASE("witness JSON round trips") {
  auto g = graphs::complete(5);
  Subdivision s{{{0, 1, 2}}, {{{0, 3, 1}}, {{1, 2}}, {{2, 4, 0}}}};
  auto back = subdivision_from_json(to_json(s));
  CHECK(back.placement == s.placement);
  CHECK(back.routes == s.routes);

  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 4}, {4, 1}, {5, 6}, {6, 7}, {7, 8}, {8, 5},
                      {0, 5}, {1, 6}, {3, 7}};
  SimpleGraph fg(9, e);
  auto f = find_flower(fg, 0, 1, 3, 8);
  REQUIRE(f.has_value());
  auto fj = to_json(*f);
  auto f2 = flower_from_json(Json::parse(fj.dump()));
  CHECK(verify_flower(fg, f2));
  CHECK(f2.u == f->u);
  CHECK(f2.C3 == f->C3);
  CHECK(f2.P2 == f->P2);

  ThreePlanarCertificate cert{{}, {0, 1, 2, 3}, {{{1, 3}, {0, 2}, {1, 3}, {0, 2}}, {0, 1, 2, 3}}};
  auto c2 = certificate_from_json(Json::parse(to_json(cert).dump()));
  CHECK(c2.terminals == cert.terminals);
  CHECK(c2.embedding.rotation == cert.embedding.rotation);
  CHECK(verify_3planar_certificate(graphs::cycle(4), c2));

  CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"A": [], "terminals": [0]})")), ParseError);
  CHECK_THROWS_AS(subdivision_from_json(Json::parse(R"({"placement": "x", "routes": []})")), ParseError);
  CHECK_THROWS_AS(flower_from_json(Json::parse(R"({"u": [0, 1, 2, 3], "C1": [0, 1]})")), ParseError);

  auto lr = find_kite_linkage(g, 0, 1, 2, 3);
  auto lj = to_json(lr);
  CHECK(lj["status"] == "Linked");
  CHECK(validate_subdivision(g, PatternMultigraph::kite(), subdivision_from_json(lj["subdivision"])).valid());

  DischargeWitness w{DischargeWitness::Kind::OuterEdge, 2, 3, 6};
  CHECK(to_json(w)["degree_sum"] == 6);
  CHECK(to_json(w)["edge"] == Json::array({2, 3}));
}
