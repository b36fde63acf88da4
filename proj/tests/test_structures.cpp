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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "hlink/connectivity.hpp"
#include "hlink/generators.hpp"
#include "hlink/structures.hpp"
#include "oracles.hpp"

using namespace hlink;

namespace {

SimpleGraph with_edges(int n, std::vector<Edge> edges) { return SimpleGraph(n, edges); }

// C1 = 0,1,2; C2 = 1,3,4; C3 = 5,6,7,8 with u4 = 8; P_i single edges.
std::vector<Edge> flower_edges() {
  return {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {3, 4}, {1, 4},
          {5, 6}, {6, 7}, {7, 8}, {5, 8}, {0, 5}, {1, 6}, {3, 7}};
}

Flower hand_flower(const SimpleGraph& g) {
  Flower f;
  f.u = {0, 1, 3, 8};
  f.C1 = OrientedCycle(g, {0, 1, 2});
  f.C2 = OrientedCycle(g, {1, 3, 4});
  f.C3 = OrientedCycle(g, {5, 6, 7, 8});
  f.P1 = PathSeq{{0, 5}};
  f.P2 = PathSeq{{1, 6}};
  f.P3 = PathSeq{{3, 7}};
  return f;
}

struct PairInstance {
  SimpleGraph g;
  std::vector<Vertex> cyc;
  Vertex u1, u2;
  std::vector<Vertex> A;
};

// Cycle 0..L-1 with random chords, A = L..L+a-1 as a path with random
// attachments (at least one).
PairInstance random_pair_instance(std::mt19937_64& rng, bool shortest = false) {
  while (true) {
    std::uniform_int_distribution<int> len(4, 10), asz(1, 3);
    std::bernoulli_distribution chord(0.15), attach(0.3);
    int L = len(rng), a = asz(rng);
    std::vector<Edge> e;
    for (int i = 0; i < L; ++i) e.push_back({i, (i + 1) % L});
    for (int i = 0; i < L; ++i)
      for (int j = i + 2; j < L; ++j)
        if (!(i == 0 && j == L - 1) && chord(rng)) e.push_back({i, j});
    for (int i = 1; i < a; ++i) e.push_back({L + i - 1, L + i});
    bool any = false;
    for (int x = L; x < L + a; ++x)
      for (int v = 0; v < L; ++v)
        if (attach(rng)) e.push_back({v, x}), any = true;
    if (!any) e.push_back({std::uniform_int_distribution<int>(0, L - 1)(rng), L});
    PairInstance inst{SimpleGraph(L + a, e), {}, 0, 0, {}};
    for (int i = 0; i < L; ++i) inst.cyc.push_back(i);
    for (int x = L; x < L + a; ++x) inst.A.push_back(x);
    inst.u1 = std::uniform_int_distribution<int>(0, L - 1)(rng);
    do inst.u2 = std::uniform_int_distribution<int>(0, L - 1)(rng);
    while (inst.u2 == inst.u1);
    if (!shortest || is_shortest_cycle_through(inst.g, OrientedCycle(inst.g, inst.cyc), inst.u1, inst.u2)) {
      return inst;
    }
  }
}

bool visits_in_order(const PathSeq& p, std::vector<Vertex> order) {
  std::size_t at = 0;
  for (Vertex w : order) {
    auto it = std::find(p.vertices.begin() + at, p.vertices.end(), w);
    if (it == p.vertices.end()) return false;
    at = static_cast<std::size_t>(it - p.vertices.begin());
  }
  return true;
}

bool inside(const PathSeq& p, const std::set<Vertex>& allowed) {
  for (Vertex v : p.vertices)
    if (!allowed.count(v)) return false;
  return true;
}

// Anchors 0..3 = u1, u2, u3, u4; Q1 = 0,4..8,2; side paths through 9..14;
// c_i = 15..19 joins a_i to u2; u4 sees a_1..a_5.
SimpleGraph engineered_flower_host() {
  std::vector<Edge> e{{0, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 2}};
  for (int b = 9; b <= 11; ++b) e.push_back({0, b}), e.push_back({b, 1});
  for (int b = 12; b <= 14; ++b) e.push_back({1, b}), e.push_back({b, 2});
  for (int i = 0; i < 5; ++i) {
    e.push_back({3, 4 + i});
    e.push_back({4 + i, 15 + i});
    e.push_back({15 + i, 1});
  }
  return SimpleGraph(20, e);
}

QSystem engineered_q() {
  return {PathSeq{{0, 4, 5, 6, 7, 8, 2}}, PathSeq{{0, 9, 1}},  PathSeq{{0, 10, 1}},
          PathSeq{{0, 11, 1}},           PathSeq{{1, 12, 2}}, PathSeq{{1, 13, 2}},
          PathSeq{{1, 14, 2}}};
}

bool output_validates(const SimpleGraph& g, const FlowerOrKite& r) {
  if (auto* f = std::get_if<Flower>(&r.outcome)) return verify_flower(g, *f);
  return validate_subdivision(g, PatternMultigraph::kite(), std::get<Subdivision>(r.outcome)).valid();
}

}  // namespace

TEST_CASE("special separating pair examples") {
  auto g = SimpleGraph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 6}, {4, 6}});
  OrientedCycle c(g, {0, 1, 2, 3, 4, 5});
  auto p = find_special_separating_pair(g, c, 0, 3, {6});
  CHECK(p.total() == 2);
  CHECK(is_separating_pair(g, p));
  std::set<Vertex> got{p.R1.front(), p.R2.front()};
  CHECK(got == std::set<Vertex>{1, 4});
  CHECK(p.r(1, 1) == p.r(1, 2));

  auto h = SimpleGraph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}});
  auto q = find_special_separating_pair(h, OrientedCycle(h, {0, 1, 2, 3, 4, 5}), 0, 3, {6});
  CHECK(q.total() == 2);
  CHECK(q.R1 == PathSeq{{0}});
  CHECK(q.R2 == PathSeq{{0}});

  std::vector<Edge> all{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  for (int v = 0; v < 4; ++v) all.push_back({v, 4});
  auto k = SimpleGraph(5, all);
  auto full = find_special_separating_pair(k, OrientedCycle(k, {0, 1, 2, 3}), 0, 2, {4});
  CHECK(full.total() == 6);
  CHECK(full.R1.size() == 3);
  CHECK(full.R2.size() == 3);

  CHECK_THROWS_AS(find_special_separating_pair(g, c, 0, 0, {6}), Error);
  CHECK_THROWS_AS(find_special_separating_pair(g, c, 0, 3, {}), Error);
  CHECK_THROWS_AS(find_special_separating_pair(g, c, 0, 3, {2}), Error);
}

TEST_CASE("an empty run has no ends") {
  auto g = SimpleGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}});
  auto p = find_special_separating_pair(g, OrientedCycle(g, {0, 1, 2, 3}), 0, 2, {4});
  CHECK(p.total() == 1);
  CHECK(p.R1 == PathSeq{{1}});
  CHECK(p.R2.empty());
  CHECK_FALSE(p.r(2, 1).has_value());
  CHECK(p.r(1, 2) == 1);
}

TEST_CASE("special pairs are minimal against exhaustive enumeration") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 500; ++trial) {
    auto in = random_pair_instance(rng);
    OrientedCycle c(in.g, in.cyc);
    auto p = find_special_separating_pair(in.g, c, in.u1, in.u2, in.A);
    CHECK(is_separating_pair(in.g, p));
    CHECK(p.total() == oracle::special_pair_total(in.g, in.cyc, in.u1, in.u2, in.A));
  }
}

TEST_CASE("connsep witnesses on an 8-cycle") {
  std::vector<Edge> e;
  for (int i = 0; i < 8; ++i) e.push_back({i, (i + 1) % 8});
  for (int v : {1, 2, 3, 5}) e.push_back({v, 8});
  auto g = SimpleGraph(9, e);
  OrientedCycle c(g, {0, 1, 2, 3, 4, 5, 6, 7});
  auto p = find_special_separating_pair(g, c, 0, 4, {8});
  CHECK(p.total() == 4);
  CHECK(p.R1 == PathSeq{{1, 2, 3}});
  CHECK(p.R2 == PathSeq{{5}});
  auto w = connsep_witnesses(g, p, 2);
  CHECK(w.path_i.is_path_in(g));
  CHECK(visits_in_order(w.path_i, {2, 0, 4, w.a}));
  CHECK(g.adjacent(w.a, 8));
  REQUIRE(w.cycle_ii);
  CHECK(w.cycle_ii->contains(0));
  CHECK(w.cycle_ii->contains(4));
  CHECK_FALSE(w.cycle_ii->contains(2));
  CHECK(w.paths_iii.empty());  // int(R2) is empty
  CHECK_THROWS_AS(connsep_witnesses(g, p, 1), Error);
  CHECK_THROWS_AS(connsep_witnesses(g, p, 5), Error);
}

TEST_CASE("connsep witnesses exist on random special pairs") {
  std::mt19937_64 rng(73);
  int applicable = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto in = random_pair_instance(rng, true);
    OrientedCycle c(in.g, in.cyc);
    auto p = find_special_separating_pair(in.g, c, in.u1, in.u2, in.A);
    std::set<Vertex> on_c(in.cyc.begin(), in.cyc.end());
    std::set<Vertex> ca = on_c;
    ca.insert(in.A.begin(), in.A.end());
    for (Vertex x : p.R1.interior()) {
      ++applicable;
      auto w = connsep_witnesses(in.g, p, x);
      CHECK(w.path_i.is_path_in(in.g));
      CHECK(inside(w.path_i, on_c));
      CHECK(visits_in_order(w.path_i, {x, in.u1, in.u2, w.a}));
      bool touches = false;
      for (Vertex a : in.A) touches = touches || in.g.adjacent(w.a, a);
      CHECK(touches);
      REQUIRE(w.cycle_ii);  // A is a path, so G[A] is connected
      CHECK(w.cycle_ii->is_cycle_in(in.g));
      CHECK(w.cycle_ii->contains(in.u1));
      CHECK(w.cycle_ii->contains(in.u2));
      auto inner1 = p.R1.interior();
      for (Vertex v : w.cycle_ii->vertices()) {
        CHECK(ca.count(v));
        CHECK(std::find(inner1.begin(), inner1.end(), v) == inner1.end());
      }
      auto inner2 = p.R2.interior();
      REQUIRE(w.paths_iii.size() == inner2.size());
      for (std::size_t i = 0; i < inner2.size(); ++i) {
        CHECK(w.paths_iii[i].is_path_in(in.g));
        CHECK(inside(w.paths_iii[i], ca));
        CHECK(visits_in_order(w.paths_iii[i], {x, in.u1, in.u2, inner2[i]}));
      }
    }
  }
  CHECK(applicable > 50);
}

TEST_CASE("connsep needs a shortest cycle") {
  // Chords 0-4, 0-7, 1-3, 6-8 on the 9-cycle give shorter 7-3 cycles; the
  // special pair below then leaves 7 with a single neighbor outside int(R1).
  std::vector<Edge> e;
  for (int i = 0; i < 9; ++i) e.push_back({i, (i + 1) % 9});
  for (Edge c : std::vector<Edge>{{0, 4}, {0, 7}, {1, 3}, {6, 8}, {9, 10}}) e.push_back(c);
  for (int v : {2, 3, 4, 6, 8}) e.push_back({v, 9});
  for (int v : {0, 3, 5}) e.push_back({v, 10});
  auto g = SimpleGraph(11, e);
  OrientedCycle c(g, {0, 1, 2, 3, 4, 5, 6, 7, 8});
  CHECK_FALSE(is_shortest_cycle_through(g, c, 7, 3));
  auto p = find_special_separating_pair(g, c, 7, 3, {9, 10});
  CHECK(p.total() == 10);
  REQUIRE(p.R1.size() == 6);
  try {
    connsep_witnesses(g, p, 8);
    FAIL("expected PreconditionViolated");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::PreconditionViolated);
  }
  CHECK(is_shortest_cycle_through(graphs::cycle(6), OrientedCycle(graphs::cycle(6), {0, 1, 2, 3, 4, 5}), 0, 3));
}

TEST_CASE("verify_flower examples") {
  auto g = with_edges(9, flower_edges());
  auto f = hand_flower(g);
  CHECK(flower_defect(g, f) == "");

  auto e = flower_edges();
  e.push_back({1, 7});
  e.push_back({3, 6});
  auto g2 = with_edges(9, e);
  auto swapped = f;
  swapped.P2 = PathSeq{{1, 7}};
  swapped.P3 = PathSeq{{3, 6}};
  CHECK_FALSE(verify_flower(g2, swapped));
  CHECK(verify_flower(g2, f));

  auto e3 = flower_edges();
  e3.push_back({1, 5});
  auto g3 = with_edges(9, e3);
  auto through = f;
  through.P2 = PathSeq{{1, 5, 6}};
  CHECK_FALSE(verify_flower(g3, through));

  auto reversed = f;
  reversed.C3 = f.C3.reversed();
  CHECK(verify_flower(g, reversed));
  auto shared = f;
  shared.u = {0, 1, 3, 0};
  CHECK_FALSE(verify_flower(g, shared));
}

TEST_CASE("find_flower examples") {
  auto g = with_edges(9, flower_edges());
  auto f = find_flower(g, 0, 1, 3, 8);
  REQUIRE(f);
  CHECK(verify_flower(g, *f));
  CHECK_FALSE(find_flower(graphs::complete(4), 0, 1, 2, 3));
  CHECK_FALSE(find_flower(graphs::complete(8), 0, 1, 2, 3));
  auto k = find_flower(graphs::complete(12), 3, 7, 1, 10);
  REQUIRE(k);
  CHECK(verify_flower(graphs::complete(12), *k));
  CHECK_THROWS_AS(find_flower(g, 0, 1, 1, 8), Error);
  CHECK_THROWS_AS(find_flower(graphs::complete(12), 0, 1, 2, 3, 5), Error);
}

TEST_CASE("flowers survive exchanging u1 and u3") {
  auto g = with_edges(9, flower_edges());
  auto f = find_flower(g, 3, 1, 0, 8);
  REQUIRE(f);
  CHECK(verify_flower(g, *f));
  CHECK(f->u[0] == 3);
  auto h = hand_flower(g);
  Flower s;
  s.u = {3, 1, 0, 8};
  s.C1 = h.C2;
  s.C2 = h.C1;
  s.C3 = h.C3;
  s.P1 = h.P3;
  s.P2 = h.P2;
  s.P3 = h.P1;
  CHECK(verify_flower(g, s));
}

TEST_CASE("extremal flowers") {
  auto g = with_edges(9, flower_edges());
  auto x = extremal_flower(g, 0, 1, 3, 8);
  CHECK(x.complete);
  CHECK(verify_flower(g, x.flower));
  CHECK(x.key.path_vertices == 6);
  CHECK(x.key.block == 4);

  auto e = flower_edges();
  e.push_back({1, 9});
  e.push_back({9, 6});
  auto longer = with_edges(10, e);
  auto y = extremal_flower(longer, 0, 1, 3, 8);
  CHECK(y.complete);
  for (int i = 1; i <= 3; ++i) CHECK(y.flower.P(i).size() == 2);

  auto k12 = graphs::complete(12);
  auto z = extremal_flower(k12, 0, 1, 2, 3);
  CHECK(z.complete);
  CHECK(z.key.path_vertices == 6);
  CHECK(z.key.block == 7);
  auto conc = check_extremal_conclusions(k12, z.flower);
  CHECK(conc.all());

  CHECK_THROWS_AS(extremal_flower(graphs::complete(8), 0, 1, 2, 3), Error);
}

TEST_CASE("extremal key prefers larger blocks") {
  FlowerKey a{6, 5, {}, {}}, b{6, 4, {1}, {}}, c{7, 9, {}, {}};
  CHECK(better(a, b));
  CHECK(better(b, c));
  CHECK_FALSE(better(a, a));
  FlowerKey d{6, 4, {2}, {}}, e{6, 4, {1, 1}, {}};
  CHECK(better(d, e));
  CHECK(better(e, b));
}

TEST_CASE("extremal conclusions detect a shortcut and a long path") {
  auto e = flower_edges();
  // C1 as a 4-cycle 0,1,2,9 with chord 0-2 giving a shorter u1-u2 cycle.
  e = {{0, 1}, {1, 2}, {2, 9}, {9, 0}, {0, 2}, {1, 3}, {3, 4}, {1, 4},
       {5, 6}, {6, 7}, {7, 8}, {5, 8}, {0, 10}, {10, 5}, {1, 6}, {3, 7}};
  auto g = with_edges(11, e);
  Flower f;
  f.u = {0, 1, 3, 8};
  f.C1 = OrientedCycle(g, {0, 1, 2, 9});
  f.C2 = OrientedCycle(g, {1, 3, 4});
  f.C3 = OrientedCycle(g, {5, 6, 7, 8});
  f.P1 = PathSeq{{0, 10, 5}};
  f.P2 = PathSeq{{1, 6}};
  f.P3 = PathSeq{{3, 7}};
  REQUIRE(verify_flower(g, f));
  auto c = check_extremal_conclusions(g, f);
  CHECK_FALSE(c.shortest_cycles);
  CHECK_FALSE(c.single_edge_paths);
  CHECK_FALSE(c.rest_three_connected);
}

TEST_CASE("attachment confinement checker") {
  auto g = with_edges(9, flower_edges());
  CHECK(attachments_confined(g, hand_flower(g)));
  auto e = flower_edges();
  e.push_back({2, 7});
  auto bad = with_edges(9, e);
  CHECK_FALSE(attachments_confined(bad, hand_flower(bad)));
  auto e2 = flower_edges();
  e2.push_back({4, 6});  // C2 - u2 reaching v2 is allowed
  auto ok = with_edges(9, e2);
  CHECK(attachments_confined(ok, hand_flower(ok)));
}

TEST_CASE("flower_or_kite on the engineered host") {
  auto g = engineered_flower_host();
  auto r = flower_or_kite(g, 0, 1, 2, 3, engineered_q());
  REQUIRE(r.is_flower());
  CHECK_FALSE(r.from_search);
  CHECK(r.construction == "flower:constructed");
  const auto& f = std::get<Flower>(r.outcome);
  CHECK(verify_flower(g, f));
  CHECK(f.P1 == PathSeq{{0, 4}});
  CHECK(f.P3 == PathSeq{{2, 8}});
}

TEST_CASE("flower_or_kite rejects bad Q-systems") {
  auto g = engineered_flower_host().with_edge(9, 10);
  auto q = engineered_q();
  q[1] = PathSeq{{0, 9, 10, 1}};  // runs through Q3's interior
  CHECK_THROWS_AS(flower_or_kite(g, 0, 1, 2, 3, q), Error);
  auto q2 = engineered_q();
  q2[4] = PathSeq{{0, 9, 1}};
  CHECK_THROWS_AS(check_q_system(g, 0, 1, 2, 3, q2), Error);
  // Removing one c_i leaves only four fan paths.
  auto thin = engineered_flower_host().without_edge(15, 1);
  try {
    flower_or_kite(thin, 0, 1, 2, 3, engineered_q());
    FAIL("expected PreconditionViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }
}

TEST_CASE("flower_or_kite on complete and random 7-connected hosts") {
  auto k12 = graphs::complete(12);
  auto q = find_q_system(k12, 0, 1, 2, 3);
  REQUIRE(q);
  auto r = flower_or_kite(k12, 0, 1, 2, 3, *q);
  CHECK(output_validates(k12, r));
  CHECK_FALSE(r.is_flower());

  int runs = 0, searched = 0;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto g = random_k_connected(12, 7, seed);
    Rng rng(seed);
    std::vector<Vertex> vs(12);
    for (int i = 0; i < 12; ++i) vs[i] = i;
    rng.shuffle(vs);
    auto qs = find_q_system(g, vs[0], vs[1], vs[2], vs[3]);
    if (!qs) continue;
    auto out = flower_or_kite(g, vs[0], vs[1], vs[2], vs[3], *qs);
    CHECK(output_validates(g, out));
    ++runs;
    searched += out.from_search;
  }
  CHECK(runs > 0);
  CHECK(searched == 0);
}

TEST_CASE("two_disjoint_paths examples") {
  auto r = two_disjoint_paths(graphs::complete(4), 0, 1, 2, 3);
  REQUIRE(r);
  CHECK(r->routes[0] == PathSeq{{0, 1}});
  CHECK(r->routes[1] == PathSeq{{2, 3}});
  CHECK_FALSE(two_disjoint_paths(graphs::cycle(4), 0, 2, 1, 3));
  auto k5 = graphs::complete(5);
  std::vector<int> v{0, 1, 2, 3};
  do {
    CHECK(two_disjoint_paths(k5, v[0], v[1], v[2], v[3]));
  } while (std::next_permutation(v.begin(), v.end()));
  CHECK_THROWS_AS(two_disjoint_paths(k5, 0, 1, 1, 2), Error);
}

TEST_CASE("two_disjoint_paths matches the brute-force enumerator") {
  std::mt19937_64 rng(79);
  auto h = PatternMultigraph::matching(2);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 4 + trial % 4;
    auto g = oracle::random_graph(n, 0.5, rng);
    auto phi = oracle::random_injection(n, 4, rng);
    auto r = two_disjoint_paths(g, phi[0], phi[1], phi[2], phi[3]);
    CHECK(r.has_value() == oracle::subdivision_exists(g, h, phi));
    if (r) CHECK(validate_subdivision(g, h, *r).valid());
  }
}
