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

#include <random>
#include <set>

#include "doctest.h"
#include "hlink/connectivity.hpp"
#include "hlink/generators.hpp"
#include "hlink/io.hpp"
#include "hlink/linkage.hpp"
#include "hlink/mader.hpp"
#include "oracles.hpp"

using namespace hlink;

namespace {

void check_disjoint_paths(const SimpleGraph& g, const std::vector<PathSeq>& paths, Vertex s,
                          Vertex t) {
  std::set<Vertex> inner;
  int direct = 0;
  for (const auto& p : paths) {
    REQUIRE(p.is_path_in(g));
    CHECK(p.front() == s);
    CHECK(p.back() == t);
    if (p.size() == 2) ++direct;
    for (Vertex v : p.interior()) CHECK(inner.insert(v).second);
  }
  CHECK(direct <= 1);
}

bool separates(const SimpleGraph& g, const std::vector<Vertex>& cut, Vertex s,
               const std::vector<Vertex>& targets, const std::vector<Vertex>& avoid = {}) {
  VertexMask removed(g.order(), 0);
  for (Vertex v : cut) removed[v] = 1;
  for (Vertex v : avoid) removed[v] = 1;
  std::vector<int> label;
  components(g, label, &removed);
  for (Vertex t : targets)
    if (!removed[t] && label[t] == label[s]) return false;
  return true;
}

SimpleGraph two_triangles() { return SimpleGraph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

}  // namespace

TEST_CASE("vertex connectivity examples") {
  CHECK(vertex_connectivity(graphs::complete(5)) == 4);
  CHECK(vertex_connectivity(graphs::petersen()) == oracle::min_vertex_cut(graphs::petersen()));
  CHECK(vertex_connectivity(graphs::petersen()) == 3);
  CHECK(vertex_connectivity(two_triangles()) == 1);
  CHECK(vertex_connectivity(SimpleGraph(4, {{0, 1}, {2, 3}})) == 0);
  CHECK(vertex_connectivity(SimpleGraph(1)) == 0);
  CHECK(vertex_connectivity(graphs::wheel(8)) == 3);
}

TEST_CASE("vertex connectivity matches brute force") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + trial % 8;
    auto g = oracle::random_graph(n, 0.3 + 0.6 * (trial % 5) / 4.0, rng);
    int want = oracle::min_vertex_cut(g);
    CHECK(vertex_connectivity(g) == want);
    CHECK(is_k_connected(g, want));
    CHECK_FALSE(is_k_connected(g, want + 1));
  }
}

TEST_CASE("disjoint_paths examples") {
  auto r = disjoint_paths(graphs::complete(4), 0, 1, 3);
  REQUIRE(r.found_paths());
  CHECK(r.paths.size() == 3);
  check_disjoint_paths(graphs::complete(4), r.paths, 0, 1);

  auto p = disjoint_paths(graphs::path(3), 0, 2, 2);
  REQUIRE(p.cut);
  CHECK(*p.cut == std::vector<Vertex>{1});

  auto pet = graphs::petersen();
  for (Vertex t = 1; t < 10; ++t) {
    if (pet.adjacent(0, t)) continue;
    auto q = disjoint_paths(pet, 0, t, 4);
    REQUIRE(q.cut);
    CHECK(q.cut->size() == 3);
    CHECK(separates(pet, *q.cut, 0, {t}));
  }
  CHECK_THROWS_AS(disjoint_paths(graphs::path(2), 0, 1, 2), Error);
}

TEST_CASE("Menger duality against brute-force cuts") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + trial % 7;
    auto g = oracle::random_graph(n, 0.5, rng);
    Vertex s = 0, t = n - 1;
    if (g.adjacent(s, t)) continue;
    int want = oracle::min_st_cut(g, s, t);
    auto r = disjoint_paths(g, s, t, n);
    REQUIRE(r.cut);
    CHECK(static_cast<int>(r.cut->size()) == want);
    CHECK(separates(g, *r.cut, s, {t}));
    auto ok = disjoint_paths(g, s, t, want);
    if (want > 0) {
      REQUIRE(ok.found_paths());
      CHECK(static_cast<int>(ok.paths.size()) == want);
      check_disjoint_paths(g, ok.paths, s, t);
    }
  }
}

TEST_CASE("fan examples") {
  auto k7 = graphs::complete(7);
  auto r = fan(k7, 0, {1, 2, 3, 4, 5, 6}, 5, {6});
  REQUIRE(r.found_paths());
  CHECK(r.paths.size() == 5);
  for (const auto& p : r.paths) CHECK(p.size() == 2);

  auto star = graphs::star(5);  // center 0, leaves 1..5
  auto c = fan(star, 1, {2, 3, 4, 5}, 2);
  REQUIRE(c.cut);
  CHECK(*c.cut == std::vector<Vertex>{0});

  CHECK_THROWS_AS(fan(k7, 0, {1, 2}, 3), Error);
}

TEST_CASE("fans in random 7-connected graphs avoid two vertices") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto g = random_k_connected(11, 7, seed);
    auto r = fan(g, 0, {1, 2, 3, 4, 5}, 5, {9, 10});
    REQUIRE(r.found_paths());
    std::set<Vertex> seen;
    std::set<Vertex> ends;
    for (const auto& p : r.paths) {
      REQUIRE(p.is_path_in(g));
      CHECK(p.front() == 0);
      ends.insert(p.back());
      for (std::size_t i = 1; i < p.size(); ++i) {
        CHECK(seen.insert(p.vertices[i]).second);
        CHECK(p.vertices[i] != 9);
        CHECK(p.vertices[i] != 10);
        if (i + 1 < p.size()) CHECK(p.vertices[i] > 5);  // stops at first target
      }
    }
    CHECK(ends.size() == 5);
  }
}

TEST_CASE("duplicate_vertices") {
  auto tri = graphs::cycle(3);
  auto d = duplicate_vertices(tri, {{0, 2}});
  CHECK(d.graph.order() == 4);
  CHECK(d.copies[0] == std::vector<Vertex>{0, 1});
  CHECK_FALSE(d.graph.adjacent(0, 1));
  for (Vertex c : d.copies[0]) {
    CHECK(d.graph.adjacent(c, d.copies[1][0]));
    CHECK(d.graph.adjacent(c, d.copies[2][0]));
  }
  auto same = duplicate_vertices(graphs::petersen(), {});
  CHECK(same.graph == graphs::petersen());
}

TEST_CASE("duplicating three vertices of K4 gives three good paths") {
  auto k4 = graphs::complete(4);
  auto d = duplicate_vertices(k4, {{0, 2}, {1, 2}, {2, 2}});
  CHECK(d.graph.order() == 7);
  std::vector<std::vector<Vertex>> groups{d.copies[0], d.copies[1], d.copies[2]};
  int brute = oracle::max_good_paths(d.graph, groups);
  CHECK(brute == 3);
  CHECK(max_good_paths(d.graph, GroupedTerminals{groups}).count == brute);
  CHECK(oracle::subdivision_exists(k4, PatternMultigraph::fat_triangle(1, 1, 1), {0, 1, 2}));
}

TEST_CASE("duplication keeps fans from a placed vertex") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    int k = 4;
    auto g = random_k_connected(9, k, seed);
    auto d = duplicate_vertices(g, {{1, 2}, {2, 2}});
    std::vector<Vertex> targets = d.copies[1];
    targets.insert(targets.end(), d.copies[2].begin(), d.copies[2].end());
    auto r = fan(d.graph, d.copies[0][0], targets, k);
    CHECK(r.found_paths());
  }
}

TEST_CASE("sharpness gadget") {
  auto a = sharpness_gadget(1, 1, 1, 2);
  CHECK(a.graph.order() == 8);
  CHECK(vertex_connectivity(a.graph) == 2);
  CHECK_FALSE(oracle::subdivision_exists(a.graph, PatternMultigraph::cycle(3), a.placement.images));

  auto b = sharpness_gadget(2, 1, 1, 4);
  CHECK(vertex_connectivity(b.graph) == 3);
  CHECK(vertex_connectivity(b.graph) == oracle::min_vertex_cut(b.graph));

  auto c = sharpness_gadget(1, 1, 0, 1);
  CHECK(vertex_connectivity(c.graph) == 1);
  auto r = find_subdivision(c.graph, PatternMultigraph::fat_triangle(1, 1, 0), c.placement);
  CHECK(r.status == LinkStatus::NotLinked);
  CHECK(r.complete);

  CHECK(sharpness_gadget(2, 2, 1).graph.order() == 4 + 15);
  CHECK_THROWS_AS(sharpness_gadget(0, 1, 1), Error);
  CHECK_THROWS_AS(sharpness_gadget(1, 1, -1), Error);
}

TEST_CASE("random_k_connected") {
  CHECK(random_k_connected(9, 8, 123) == graphs::complete(9));
  auto g = random_k_connected(12, 7, 1);
  CHECK(vertex_connectivity(g) >= 7);
  auto h = random_k_connected(5, 2, 7);
  CHECK(vertex_connectivity(h) >= 2);
  CHECK(emit_graph(random_k_connected(12, 7, 1)) == emit_graph(g));
  CHECK(emit_graph(random_k_connected(12, 7, 2)) != emit_graph(g));
  CHECK_THROWS_AS(random_k_connected(4, 4, 1), Error);
  KConnectedOptions tight;
  tight.max_attempts = 1;
  tight.thin = false;
  CHECK_NOTHROW(random_k_connected(10, 9, 1, tight));
}

TEST_CASE("rng draws are bit-stable") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(5489);
  // First mt19937_64 output for its default seed.
  CHECK(c.next() == 14514284786278117030ULL);
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  Rng d(9);
  for (int i = 0; i < 1000; ++i) {
    double u = d.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(d.below(7) < 7);
  }
}
