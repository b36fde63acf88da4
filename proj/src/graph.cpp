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

#include "hlink/graph.hpp"

#include <algorithm>
#include <numeric>

namespace hlink {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidPattern: return "InvalidPattern";
    case ErrorCode::InvalidPlacement: return "InvalidPlacement";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::VertexNotOnCycle: return "VertexNotOnCycle";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::AdjacentTerminalsNoCut: return "AdjacentTerminalsNoCut";
    case ErrorCode::InsufficientTargets: return "InsufficientTargets";
    case ErrorCode::ParameterError: return "ParameterError";
    case ErrorCode::GenerationBudgetExceeded: return "GenerationBudgetExceeded";
    case ErrorCode::BudgetNonPositive: return "BudgetNonPositive";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
    case ErrorCode::MalformedCertificate: return "MalformedCertificate";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::Exhausted: return "Exhausted";
    case ErrorCode::NoFlower: return "NoFlower";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotThreeConnected: return "NotThreeConnected";
    case ErrorCode::NotPlanar: return "NotPlanar";
    case ErrorCode::WitnessNotFound: return "WitnessNotFound";
    case ErrorCode::CaseAnalysisIncomplete: return "CaseAnalysisIncomplete";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- SimpleGraph

SimpleGraph::SimpleGraph(int n)
    : n_(n),
      adj_(static_cast<std::size_t>(std::max(n, 0))),
      matrix_(static_cast<std::size_t>(std::max(n, 0)) * std::max(n, 0), 0) {
  if (n < 0) throw Error(ErrorCode::RangeError, "negative vertex count");
}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
  for (auto [u, v] : edges) {
    if (!contains(u) || !contains(v)) {
      throw Error(ErrorCode::RangeError,
                  "edge " + std::to_string(u) + " " + std::to_string(v) +
                      " outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      throw Error(ErrorCode::InvalidGraph, "loop at " + std::to_string(u));
    }
    auto& cell = matrix_[static_cast<std::size_t>(u) * n_ + v];
    if (cell) {
      throw Error(ErrorCode::InvalidGraph, "parallel edge " +
                                               std::to_string(u) + " " +
                                               std::to_string(v));
    }
    cell = 1;
    matrix_[static_cast<std::size_t>(v) * n_ + u] = 1;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

SimpleGraph SimpleGraph::with_edge(Vertex u, Vertex v) const {
  auto list = edges();
  list.emplace_back(std::min(u, v), std::max(u, v));
  return SimpleGraph(n_, list);
}

SimpleGraph SimpleGraph::without_edge(Vertex u, Vertex v) const {
  auto list = edges();
  Edge e{std::min(u, v), std::max(u, v)};
  list.erase(std::remove(list.begin(), list.end(), e), list.end());
  return SimpleGraph(n_, list);
}

SimpleGraph SimpleGraph::without_vertices(const VertexMask& removed,
                                          std::vector<Vertex>* old_ids) const {
  std::vector<Vertex> relabel(n_, -1);
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < n_; ++v) {
    if (!removed[v]) {
      relabel[v] = static_cast<Vertex>(kept.size());
      kept.push_back(v);
    }
  }
  std::vector<Edge> list;
  for (auto [u, v] : edges()) {
    if (relabel[u] >= 0 && relabel[v] >= 0) list.emplace_back(relabel[u], relabel[v]);
  }
  if (old_ids) *old_ids = kept;
  return SimpleGraph(static_cast<int>(kept.size()), list);
}

namespace graphs {

SimpleGraph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return SimpleGraph(n, e);
}

SimpleGraph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return SimpleGraph(n, e);
}

SimpleGraph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return SimpleGraph(n, e);
}

SimpleGraph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return SimpleGraph(leaves + 1, e);
}

SimpleGraph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return SimpleGraph(10, e);
}

SimpleGraph wheel(int rim) {
  std::vector<Edge> e;
  for (int i = 0; i < rim; ++i) {
    e.emplace_back(i, (i + 1) % rim);
    e.emplace_back(i, rim);
  }
  return SimpleGraph(rim + 1, e);
}

SimpleGraph circulant(int n, std::span<const int> offsets) {
  std::vector<Edge> e;
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int d : offsets) {
      int j = ((i + d) % n + n) % n;
      int a = std::min(i, j), b = std::max(i, j);
      if (a == b || seen[static_cast<std::size_t>(a) * n + b]) continue;
      seen[static_cast<std::size_t>(a) * n + b] = 1;
      e.emplace_back(a, b);
    }
  }
  return SimpleGraph(n, e);
}

SimpleGraph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return SimpleGraph(a + b, e);
}

}  // namespace graphs

// ------------------------------------------------------------ PatternMultigraph

namespace {

Permutation identity(int m) {
  Permutation p(m);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool preserves(const PatternMultigraph& h, const Permutation& p) {
  for (int a = 0; a < h.order(); ++a)
    for (int b = a + 1; b < h.order(); ++b)
      if (h.multiplicity(a, b) != h.multiplicity(p[a], p[b])) return false;
  return true;
}

}  // namespace

PatternMultigraph::PatternMultigraph(int m, std::vector<PatternEdge> edges,
                                     std::string name)
    : m_(m), edges_(std::move(edges)), name_(std::move(name)) {
  if (m < 0) throw Error(ErrorCode::InvalidPattern, "negative vertex count");
  for (const auto& e : edges_) {
    if (e.a < 0 || e.a >= m || e.b < 0 || e.b >= m) {
      throw Error(ErrorCode::InvalidPattern, "pattern vertex out of range");
    }
    if (e.a == e.b) throw Error(ErrorCode::InvalidPattern, "pattern loop");
  }
  automorphisms_.push_back(identity(m));
}

PatternMultigraph PatternMultigraph::fat_triangle(int k1, int k2, int k3) {
  if (k1 < 0 || k2 < 0 || k3 < 0) {
    throw Error(ErrorCode::ParameterError, "negative fat-triangle multiplicity");
  }
  std::vector<PatternEdge> e;
  for (int i = 0; i < k1; ++i) e.push_back({0, 1});
  for (int i = 0; i < k2; ++i) e.push_back({1, 2});
  for (int i = 0; i < k3; ++i) e.push_back({2, 0});
  PatternMultigraph h(3, std::move(e),
                      "F(" + std::to_string(k1) + "," + std::to_string(k2) +
                          "," + std::to_string(k3) + ")");
  // The six vertex permutations; keep those that preserve multiplicities.
  static const int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                   {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  h.automorphisms_.clear();
  for (const auto& p : kPerms) {
    Permutation perm(p, p + 3);
    if (preserves(h, perm)) h.automorphisms_.push_back(perm);
  }
  return h;
}

PatternMultigraph PatternMultigraph::kite() {
  PatternMultigraph h(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}, "kite");
  h.automorphisms_ = {{0, 1, 2, 3}, {0, 2, 1, 3}};
  return h;
}

PatternMultigraph PatternMultigraph::bond(int k) {
  if (k < 1) throw Error(ErrorCode::ParameterError, "bond needs k >= 1");
  std::vector<PatternEdge> e(static_cast<std::size_t>(k), PatternEdge{0, 1});
  PatternMultigraph h(2, std::move(e), "B" + std::to_string(k));
  h.automorphisms_ = {{0, 1}, {1, 0}};
  return h;
}

PatternMultigraph PatternMultigraph::matching(int k) {
  if (k < 1) throw Error(ErrorCode::ParameterError, "matching needs k >= 1");
  std::vector<PatternEdge> e;
  for (int i = 0; i < k; ++i) e.push_back({2 * i, 2 * i + 1});
  PatternMultigraph h(2 * k, std::move(e), std::to_string(k) + "K2");
  // Swapping the two ends of any subset of pairs.
  h.automorphisms_.clear();
  for (std::uint32_t mask = 0; mask < (1u << std::min(k, 8)); ++mask) {
    Permutation p = identity(2 * k);
    for (int i = 0; i < std::min(k, 8); ++i)
      if (mask >> i & 1u) std::swap(p[2 * i], p[2 * i + 1]);
    h.automorphisms_.push_back(std::move(p));
  }
  return h;
}

PatternMultigraph PatternMultigraph::cycle(int k) {
  if (k < 3) throw Error(ErrorCode::ParameterError, "cycle needs k >= 3");
  std::vector<PatternEdge> e;
  for (int i = 0; i < k; ++i) e.push_back({i, (i + 1) % k});
  PatternMultigraph h(k, std::move(e), "C" + std::to_string(k));
  h.automorphisms_.clear();
  for (int shift = 0; shift < k; ++shift) {
    Permutation rot(k), ref(k);
    for (int i = 0; i < k; ++i) {
      rot[i] = (i + shift) % k;
      ref[i] = ((shift - i) % k + k) % k;
    }
    h.automorphisms_.push_back(std::move(rot));
    h.automorphisms_.push_back(std::move(ref));
  }
  return h;
}

PatternMultigraph PatternMultigraph::path(int m) {
  if (m < 2) throw Error(ErrorCode::ParameterError, "path needs >= 2 vertices");
  std::vector<PatternEdge> e;
  for (int i = 0; i + 1 < m; ++i) e.push_back({i, i + 1});
  PatternMultigraph h(m, std::move(e), "P" + std::to_string(m));
  Permutation rev(m);
  for (int i = 0; i < m; ++i) rev[i] = m - 1 - i;
  h.automorphisms_ = {identity(m), rev};
  return h;
}

int PatternMultigraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges_) d += (e.a == v) + (e.b == v);
  return d;
}

int PatternMultigraph::multiplicity(int a, int b) const {
  int c = 0;
  for (const auto& e : edges_)
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) ++c;
  return c;
}

bool PatternMultigraph::has_isolated_vertex() const {
  for (int v = 0; v < m_; ++v)
    if (degree(v) == 0) return true;
  return false;
}

// ------------------------------------------------------------------ Placement

void Placement::check(const PatternMultigraph& h, const SimpleGraph& g) const {
  if (images.size() != static_cast<std::size_t>(h.order())) {
    throw Error(ErrorCode::InvalidPlacement,
                "placement has " + std::to_string(images.size()) +
                    " images for a pattern on " + std::to_string(h.order()) +
                    " vertices");
  }
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : images) {
    if (!g.contains(v)) {
      throw Error(ErrorCode::InvalidPlacement,
                  "image " + std::to_string(v) + " not a host vertex");
    }
    if (used[v]) {
      throw Error(ErrorCode::InvalidPlacement,
                  "image " + std::to_string(v) + " used twice");
    }
    used[v] = 1;
  }
}

// -------------------------------------------------------------------- PathSeq

bool PathSeq::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::vector<Vertex> PathSeq::ends() const {
  if (vertices.empty()) return {};
  if (vertices.size() == 1) return {vertices.front()};
  return {vertices.front(), vertices.back()};
}

std::vector<Vertex> PathSeq::interior() const {
  if (vertices.size() <= 2) return {};
  return {vertices.begin() + 1, vertices.end() - 1};
}

PathSeq PathSeq::reversed() const {
  return PathSeq{{vertices.rbegin(), vertices.rend()}};
}

bool PathSeq::is_path_in(const SimpleGraph& g) const {
  if (vertices.empty()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex v = vertices[i];
    if (!g.contains(v) || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.adjacent(vertices[i - 1], v)) return false;
  }
  return true;
}

PathSeq join(std::initializer_list<PathSeq> parts) {
  PathSeq out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    auto begin = p.vertices.begin();
    if (!out.empty() && out.back() == p.front()) ++begin;
    out.vertices.insert(out.vertices.end(), begin, p.vertices.end());
  }
  return out;
}

// -------------------------------------------------------------- OrientedCycle

namespace {

void require_distinct(const std::vector<Vertex>& vs) {
  if (vs.size() < 3) throw Error(ErrorCode::InvalidPath, "cycle needs >= 3 vertices");
  auto sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidPath, "cycle repeats a vertex");
  }
}

}  // namespace

OrientedCycle::OrientedCycle(const SimpleGraph& g, std::vector<Vertex> vertices)
    : vertices_(std::move(vertices)) {
  require_distinct(vertices_);
  if (!is_cycle_in(g)) throw Error(ErrorCode::InvalidPath, "not a cycle of the host");
}

OrientedCycle OrientedCycle::unchecked(std::vector<Vertex> vertices) {
  require_distinct(vertices);
  OrientedCycle c;
  c.vertices_ = std::move(vertices);
  return c;
}

bool OrientedCycle::contains(Vertex v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::size_t OrientedCycle::position(Vertex v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) {
    throw Error(ErrorCode::VertexNotOnCycle, std::to_string(v));
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

Vertex OrientedCycle::next(Vertex v) const {
  return vertices_[(position(v) + 1) % vertices_.size()];
}

Vertex OrientedCycle::prev(Vertex v) const {
  return vertices_[(position(v) + vertices_.size() - 1) % vertices_.size()];
}

OrientedCycle OrientedCycle::reversed() const {
  OrientedCycle c;
  c.vertices_.assign(vertices_.rbegin(), vertices_.rend());
  return c;
}

bool OrientedCycle::is_cycle_in(const SimpleGraph& g) const {
  if (vertices_.size() < 3) return false;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    Vertex a = vertices_[i], b = vertices_[(i + 1) % vertices_.size()];
    if (!g.contains(a) || !g.contains(b) || !g.adjacent(a, b)) return false;
  }
  return true;
}

PathSeq interval(const OrientedCycle& c, Vertex u, Vertex v, Bound at_u,
                 Bound at_v) {
  std::size_t i = c.position(u);
  std::size_t j = c.position(v);
  if (i == j) throw Error(ErrorCode::PreconditionViolated, "interval needs u != v");
  auto vs = c.vertices();
  PathSeq out;
  for (std::size_t p = i;; p = (p + 1) % vs.size()) {
    bool is_u = p == i, is_v = p == j;
    if ((is_u && at_u == Bound::Closed) || (is_v && at_v == Bound::Closed) ||
        (!is_u && !is_v)) {
      out.vertices.push_back(vs[p]);
    }
    if (is_v) break;
  }
  return out;
}

// ---------------------------------------------------------------- Subdivision

const char* to_string(Violation v) noexcept {
  switch (v) {
    case Violation::None: return "none";
    case Violation::InvalidPlacement: return "invalid-placement";
    case Violation::NotAPath: return "not-a-path";
    case Violation::WrongEndpoints: return "wrong-endpoints";
    case Violation::InteriorHitsPlacedVertex: return "interior-hits-placed-vertex";
    case Violation::SharedInterior: return "shared-interior";
    case Violation::RepeatedEdge: return "repeated-edge";
  }
  return "unknown";
}

SubdivisionCheck validate_subdivision(const SimpleGraph& g,
                                      const PatternMultigraph& h,
                                      const Subdivision& s) {
  if (s.routes.size() != h.edge_count()) {
    throw Error(ErrorCode::ArityMismatch,
                std::to_string(s.routes.size()) + " routes for " +
                    std::to_string(h.edge_count()) + " pattern edges");
  }
  SubdivisionCheck out;
  auto fail = [&](Violation why, std::size_t route, std::string detail) {
    out.reason = why;
    out.route = route;
    out.detail = std::move(detail);
    return out;
  };
  try {
    s.placement.check(h, g);
  } catch (const Error& e) {
    return fail(Violation::InvalidPlacement, 0, e.what());
  }
  VertexMask placed(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s.placement.images) placed[v] = 1;

  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  std::vector<Edge> direct;
  for (std::size_t r = 0; r < s.routes.size(); ++r) {
    const auto& route = s.routes[r];
    if (!route.is_path_in(g)) return fail(Violation::NotAPath, r, "");
    Vertex a = s.placement[h.edges()[r].a], b = s.placement[h.edges()[r].b];
    bool forward = route.front() == a && route.back() == b;
    bool backward = route.front() == b && route.back() == a;
    if (route.size() < 2 || !(forward || backward)) {
      return fail(Violation::WrongEndpoints, r, "");
    }
    for (Vertex v : route.interior()) {
      if (placed[v]) {
        return fail(Violation::InteriorHitsPlacedVertex, r,
                    "vertex " + std::to_string(v));
      }
      if (owner[v] >= 0) {
        return fail(Violation::SharedInterior, r,
                    "vertex " + std::to_string(v) + " also on route " +
                        std::to_string(owner[v]));
      }
      owner[v] = static_cast<int>(r);
    }
    if (route.size() == 2) {
      Edge e{std::min(a, b), std::max(a, b)};
      if (std::find(direct.begin(), direct.end(), e) != direct.end()) {
        return fail(Violation::RepeatedEdge, r, "");
      }
      direct.push_back(e);
    }
  }
  return out;
}

}  // namespace hlink
