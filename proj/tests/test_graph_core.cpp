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

#include <map>
#include <random>

#include "doctest.h"
#include "hlink/graph.hpp"
#include "hlink/io.hpp"
#include "hlink/linkage.hpp"
#include "oracles.hpp"

using namespace hlink;

namespace {

std::vector<Vertex> seq(const PathSeq& p) { return p.vertices; }

Subdivision triangle_routes(Vertex a, Vertex b, Vertex c) {
  return Subdivision{Placement{{a, b, c}}, {PathSeq{{a, b}}, PathSeq{{b, c}}, PathSeq{{c, a}}}};
}

}  // namespace

TEST_CASE("interval follows the stored orientation") {
  auto c = OrientedCycle::unchecked({0, 1, 2, 3, 4, 5});
  CHECK(seq(interval(c, 0, 3)) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(seq(interval(c, 3, 0, Bound::Open, Bound::Closed)) == std::vector<Vertex>{4, 5, 0});
  auto tri = OrientedCycle::unchecked({0, 1, 2});
  CHECK(interval(tri, 0, 1, Bound::Open, Bound::Open).empty());
  CHECK(seq(interval(c.reversed(), 0, 3)) == std::vector<Vertex>{0, 5, 4, 3});
}

TEST_CASE("interval errors") {
  auto c = OrientedCycle::unchecked({0, 1, 2, 3});
  CHECK_THROWS_AS(interval(c, 0, 9), Error);
  try {
    interval(c, 0, 9);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VertexNotOnCycle);
  }
}

TEST_CASE("closed and half-open intervals partition the cycle") {
  std::mt19937_64 rng(11);
  for (int len = 3; len <= 9; ++len) {
    std::vector<Vertex> verts(len);
    for (int i = 0; i < len; ++i) verts[i] = 3 * i + 1;
    std::shuffle(verts.begin(), verts.end(), rng);
    auto c = OrientedCycle::unchecked(verts);
    for (Vertex u : verts) {
      for (Vertex v : verts) {
        if (u == v) continue;
        auto a = interval(c, u, v);
        auto b = interval(c, v, u, Bound::Open, Bound::Open);
        CHECK(a.size() + b.size() == static_cast<std::size_t>(len));
        std::set<Vertex> all(a.vertices.begin(), a.vertices.end());
        all.insert(b.vertices.begin(), b.vertices.end());
        CHECK(all.size() == static_cast<std::size_t>(len));
      }
    }
  }
}

TEST_CASE("oriented cycle construction checks adjacency") {
  auto g = graphs::cycle(5);
  CHECK_NOTHROW(OrientedCycle(g, {0, 1, 2, 3, 4}));
  CHECK_THROWS_AS(OrientedCycle(g, {0, 2, 1, 3, 4}), Error);
  CHECK_THROWS_AS(OrientedCycle::unchecked({0, 1}), Error);
  OrientedCycle c(g, {0, 1, 2, 3, 4});
  CHECK(c.next(4) == 0);
  CHECK(c.prev(0) == 4);
}

TEST_CASE("validate_subdivision accepts a triangle in K4") {
  auto g = graphs::complete(4);
  auto h = PatternMultigraph::cycle(3);
  CHECK(validate_subdivision(g, h, triangle_routes(0, 1, 2)).valid());
}

TEST_CASE("validate_subdivision rejects shared interiors") {
  auto g = graphs::complete(4);
  auto h = PatternMultigraph::cycle(3);
  auto s = triangle_routes(0, 1, 2);
  s.routes[0] = PathSeq{{0, 3, 1}};
  s.routes[1] = PathSeq{{1, 3, 2}};
  auto check = validate_subdivision(g, h, s);
  CHECK_FALSE(check.valid());
  CHECK(check.reason == Violation::SharedInterior);
}

TEST_CASE("validate_subdivision on fat triangle in K5") {
  auto g = graphs::complete(5);
  auto h = PatternMultigraph::fat_triangle(1, 1, 1);
  CHECK(validate_subdivision(g, h, triangle_routes(0, 1, 2)).valid());
}

TEST_CASE("validate_subdivision reasons") {
  auto g = graphs::complete(5);
  auto h = PatternMultigraph::bond(2);
  Subdivision s{Placement{{0, 1}}, {PathSeq{{0, 1}}, PathSeq{{0, 1}}}};
  CHECK(validate_subdivision(g, h, s).reason == Violation::RepeatedEdge);
  s.routes[1] = PathSeq{{0, 2, 3}};
  CHECK(validate_subdivision(g, h, s).reason == Violation::WrongEndpoints);
  s.routes[1] = PathSeq{{0, 2, 0, 1}};
  CHECK(validate_subdivision(g, h, s).reason == Violation::NotAPath);
  s.routes[1] = PathSeq{{1, 2, 0}};
  CHECK(validate_subdivision(g, h, s).valid());

  auto tri = PatternMultigraph::fat_triangle(1, 1, 1);
  Subdivision t = triangle_routes(0, 1, 2);
  t.routes[0] = PathSeq{{0, 2, 1}};
  CHECK(validate_subdivision(g, tri, t).reason == Violation::InteriorHitsPlacedVertex);
  t.routes.pop_back();
  CHECK_THROWS_AS(validate_subdivision(g, tri, t), Error);
}

TEST_CASE("validation is invariant under permuting parallel routes") {
  auto g = graphs::complete(6);
  auto h = PatternMultigraph::fat_triangle(3, 1, 1);
  Subdivision s{Placement{{0, 1, 2}},
                {PathSeq{{0, 1}}, PathSeq{{0, 3, 1}}, PathSeq{{0, 4, 1}}, PathSeq{{1, 2}},
                 PathSeq{{2, 5, 0}}}};
  REQUIRE(validate_subdivision(g, h, s).valid());
  std::vector<int> perm{0, 1, 2};
  do {
    Subdivision t = s;
    for (int i = 0; i < 3; ++i) t.routes[i] = s.routes[perm[i]];
    CHECK(validate_subdivision(g, h, t).valid());
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("contracting route interiors recovers the pattern edge multiset") {
  std::mt19937_64 rng(5);
  auto h = PatternMultigraph::kite();
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto g = oracle::random_graph(8, 0.55, rng);
    auto phi = oracle::random_injection(8, 4, rng);
    auto r = find_subdivision(g, h, Placement{phi});
    if (!r.linked()) continue;
    ++checked;
    std::multiset<std::pair<Vertex, Vertex>> want, got;
    for (const auto& e : h.edges()) want.insert(std::minmax(phi[e.a], phi[e.b]));
    for (const auto& p : r.subdivision->routes) got.insert(std::minmax(p.front(), p.back()));
    CHECK(want == got);
  }
  CHECK(checked > 5);
}

TEST_CASE("parse_graph text examples") {
  auto g = parse_graph("n=3\n0 1\n1 2\n");
  CHECK(g == graphs::path(3));
  CHECK(emit_graph(parse_graph("# c\nn=4\n2 1 # trailing\n\n0 3\n")) == "n=4\n0 3\n1 2\n");
  auto iso = parse_graph("n=5\n0 1\n");
  CHECK(iso.order() == 5);
  CHECK(iso.size() == 1);
}

TEST_CASE("parse_graph errors carry line numbers") {
  try {
    parse_graph("n=2\n0 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_graph("n=3\n0 1\n1 7\n");
    FAIL("expected RangeError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RangeError);
  }
  CHECK_THROWS_AS(parse_graph("0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("n=3\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("n=3\n0 x\n"), ParseError);
}

TEST_CASE("text and JSON round trips") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    auto g = oracle::random_graph(1 + i % 9, 0.4, rng);
    CHECK(parse_graph(emit_graph(g)) == g);
    CHECK(parse_graph(emit_graph_json(g)) == g);
    CHECK(emit_graph(parse_graph(emit_graph(g))) == emit_graph(g));
  }
}

TEST_CASE("graph hash is stable") {
  CHECK(graph_hash(graphs::complete(4)) == graph_hash(parse_graph("n=4\n2 3\n0 1\n0 2\n0 3\n1 2\n1 3\n")));
  CHECK(graph_hash(graphs::complete(4)) != graph_hash(graphs::cycle(4)));
  // FNV-1a 64 test vector.
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("named patterns") {
  auto f = PatternMultigraph::fat_triangle(2, 1, 0);
  CHECK(f.order() == 3);
  CHECK(f.multiplicity(0, 1) == 2);
  CHECK(f.multiplicity(1, 2) == 1);
  CHECK(f.multiplicity(2, 0) == 0);
  auto k = PatternMultigraph::kite();
  CHECK(k.degree(0) == 3);
  CHECK(k.edge_count() == 4);
  CHECK(parse_pattern("F(2,1,1)").edge_count() == 4);
  CHECK(parse_pattern("kite").name() == k.name());
  CHECK(parse_pattern("B3").multiplicity(0, 1) == 3);
  CHECK(parse_pattern("2K2").edge_count() == 2);
  CHECK(parse_pattern("C4").order() == 4);
  CHECK(parse_pattern("P4").edge_count() == 3);
  CHECK(parse_pattern("m=2\n0 1\n0 1\n").multiplicity(0, 1) == 2);
  CHECK_THROWS_AS(parse_pattern("nonsense"), Error);
  CHECK_THROWS_AS(PatternMultigraph(2, {{0, 0}}), Error);
}

TEST_CASE("pattern automorphism lists are groups that preserve edges") {
  for (const auto& h : {PatternMultigraph::fat_triangle(1, 1, 1), PatternMultigraph::fat_triangle(2, 2, 1),
                        PatternMultigraph::kite(), PatternMultigraph::cycle(5),
                        PatternMultigraph::matching(3), PatternMultigraph::path(4)}) {
    std::set<Permutation> autos(h.automorphisms().begin(), h.automorphisms().end());
    for (const auto& s : autos) {
      for (int a = 0; a < h.order(); ++a)
        for (int b = 0; b < h.order(); ++b)
          if (a != b) CHECK(h.multiplicity(a, b) == h.multiplicity(s[a], s[b]));
      for (const auto& t : autos) {
        Permutation comp(h.order());
        for (int v = 0; v < h.order(); ++v) comp[v] = s[t[v]];
        CHECK(autos.count(comp) == 1);
      }
    }
  }
  CHECK(PatternMultigraph::fat_triangle(1, 1, 1).automorphisms().size() == 6);
  CHECK(PatternMultigraph::fat_triangle(2, 1, 1).automorphisms().size() == 2);
  CHECK(PatternMultigraph::fat_triangle(3, 2, 1).automorphisms().size() == 1);
}

TEST_CASE("placement checks") {
  auto g = graphs::complete(4);
  auto h = PatternMultigraph::kite();
  auto check = [&](std::vector<Vertex> images) { Placement{std::move(images)}.check(h, g); };
  CHECK_NOTHROW(check({0, 1, 2, 3}));
  CHECK_THROWS_AS(check({0, 1, 1, 3}), Error);
  CHECK_THROWS_AS(check({0, 1, 2}), Error);
  CHECK_THROWS_AS(check({0, 1, 2, 4}), Error);
}

TEST_CASE("path accessors") {
  PathSeq p{{4, 2, 7, 1}};
  CHECK(p.ends() == std::vector<Vertex>{4, 1});
  CHECK(p.interior() == std::vector<Vertex>{2, 7});
  PathSeq single{{3}};
  CHECK(single.ends() == std::vector<Vertex>{3});
  CHECK(single.interior().empty());
  CHECK(join({PathSeq{{1, 2}}, PathSeq{{2, 3, 4}}}).vertices == std::vector<Vertex>{1, 2, 3, 4});
}

TEST_CASE("named host graphs") {
  CHECK(graphs::petersen().size() == 15);
  CHECK(graphs::wheel(6).order() == 7);
  CHECK(graphs::wheel(6).degree(6) == 6);
  std::vector<int> offs{1, 2, 3, 4};
  auto c = graphs::circulant(13, offs);
  for (Vertex v = 0; v < 13; ++v) CHECK(c.degree(v) == 8);
  CHECK(graphs::complete_bipartite(2, 3).size() == 6);
  CHECK(graphs::star(5).degree(0) == 5);
}
