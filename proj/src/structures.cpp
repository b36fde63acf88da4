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

#include "hlink/structures.hpp"

#include <algorithm>
#include <limits>

#include "hlink/connectivity.hpp"

namespace hlink {

namespace {

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {
    if (limit == 0) throw Error(ErrorCode::BudgetNonPositive, "budget must be positive");
  }
  void tick() {
    if (++used_ > limit_) throw Error(ErrorCode::Exhausted, "search budget exhausted");
  }
  std::uint64_t used() const noexcept { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

VertexMask mask_of(int n, std::span<const Vertex> vs) {
  VertexMask m(static_cast<std::size_t>(n), 0);
  for (Vertex v : vs) m[v] = 1;
  return m;
}

PathSeq slice(const PathSeq& p, std::size_t from, std::size_t to) {
  PathSeq out;
  if (from <= to) {
    for (std::size_t i = from; i <= to; ++i) out.vertices.push_back(p.vertices[i]);
  } else {
    for (std::size_t i = from + 1; i-- > to;) out.vertices.push_back(p.vertices[i]);
  }
  return out;
}

std::size_t index_in(const PathSeq& p, Vertex v) {
  auto it = std::find(p.vertices.begin(), p.vertices.end(), v);
  return static_cast<std::size_t>(it - p.vertices.begin());
}

// Subpath of p from a to b inclusive, in that direction.
PathSeq segment(const PathSeq& p, Vertex a, Vertex b) {
  return slice(p, index_in(p, a), index_in(p, b));
}

// True if a, b, c, d occur in this cyclic order along positions of a cycle
// of length len (forward direction only).
bool cyclic_forward(std::size_t len, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  auto off = [&](std::size_t x) { return (x + len - a) % len; };
  return off(b) < off(c) && off(c) < off(d);
}

// Cycles with exactly `len` vertices through a (and b when b >= 0) avoiding
// `blocked`, each reported once as a list starting at a with
// cyc[1] < cyc[len - 1]. `visit` returns true to stop the enumeration.
template <class Visit>
bool for_each_cycle(const SimpleGraph& g, Vertex a, Vertex b, int len, const VertexMask& blocked,
                    Budget& budget, Visit&& visit) {
  const int n = g.order();
  if (len < 3 || len > n) return false;
  // BFS distances from a bound how far the walk may stray and still close.
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue{a};
  dist[a] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (Vertex w : g.neighbors(queue[h])) {
      if (blocked[w] || dist[w] >= 0) continue;
      dist[w] = dist[queue[h]] + 1;
      queue.push_back(w);
    }
  }
  if (b >= 0 && (dist[b] < 0 || 2 * dist[b] > len)) return false;
  std::vector<Vertex> cyc{a};
  VertexMask on(static_cast<std::size_t>(n), 0);
  on[a] = 1;
  bool has_b = b < 0 || b == a;
  auto rec = [&](auto&& self) -> bool {
    Vertex v = cyc.back();
    int depth = static_cast<int>(cyc.size());
    if (depth == len) {
      if (!has_b || !g.adjacent(v, a) || cyc[1] > v) return false;
      return visit(cyc);
    }
    for (Vertex w : g.neighbors(v)) {
      if (blocked[w] || on[w] || dist[w] < 0) continue;
      // After w, len - depth - 1 more vertices, then the closing edge.
      if (dist[w] > len - depth) continue;
      if (depth >= 2 && w < cyc[1] && depth + 1 == len) continue;
      bool is_b = w == b;
      if (!has_b && !is_b && b >= 0 && depth + 1 == len) continue;
      budget.tick();
      cyc.push_back(w);
      on[w] = 1;
      bool had_b = has_b;
      has_b = has_b || is_b;
      bool stop = self(self);
      has_b = had_b;
      on[w] = 0;
      cyc.pop_back();
      if (stop) return true;
    }
    return false;
  };
  return rec(rec);
}

// Path inside `allowed` visiting waypoints in order, then (if `ends` is
// non-empty) continuing to a vertex flagged in ends; the last waypoint
// itself counts when flagged.
class OrderedPath {
 public:
  OrderedPath(const SimpleGraph& g, const VertexMask& allowed, std::vector<Vertex> waypoints,
              const VertexMask* ends, Budget& budget)
      : g_(g), allowed_(allowed), way_(std::move(waypoints)), ends_(ends), budget_(budget),
        on_(static_cast<std::size_t>(g.order()), 0),
        way_index_(static_cast<std::size_t>(g.order()), -1),
        seen_(static_cast<std::size_t>(g.order()), 0) {
    for (std::size_t i = 0; i < way_.size(); ++i) way_index_[way_[i]] = static_cast<int>(i);
  }

  std::optional<PathSeq> run() {
    for (Vertex w : way_) {
      if (!allowed_[w]) return std::nullopt;
    }
    path_.push_back(way_[0]);
    on_[way_[0]] = 1;
    if (dfs(1)) return PathSeq{path_};
    return std::nullopt;
  }

 private:
  bool goal(Vertex v) const { return ends_ != nullptr && (*ends_)[v]; }

  // Whether the next target is reachable from v through unused vertices.
  bool reachable(Vertex v, std::size_t next) {
    ++stamp_;
    std::vector<Vertex> queue{v};
    seen_[v] = stamp_;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      Vertex x = queue[h];
      if (next < way_.size() ? x == way_[next] : goal(x)) return true;
      for (Vertex y : g_.neighbors(x)) {
        if (!allowed_[y] || on_[y] || seen_[y] == stamp_) continue;
        int wi = way_index_[y];
        if (wi >= 0 && static_cast<std::size_t>(wi) != next) continue;
        seen_[y] = stamp_;
        queue.push_back(y);
      }
    }
    return false;
  }

  bool dfs(std::size_t next) {
    Vertex v = path_.back();
    if (next == way_.size() && (ends_ == nullptr || goal(v))) return true;
    for (Vertex w : g_.neighbors(v)) {
      if (!allowed_[w] || on_[w]) continue;
      int wi = way_index_[w];
      if (wi >= 0 && static_cast<std::size_t>(wi) != next) continue;
      std::size_t after = wi >= 0 ? next + 1 : next;
      budget_.tick();
      path_.push_back(w);
      on_[w] = 1;
      bool ok = (after == way_.size() && (ends_ == nullptr || goal(w))) ||
                (reachable(w, after) && dfs(after));
      if (ok) return true;
      on_[w] = 0;
      path_.pop_back();
    }
    return false;
  }

  const SimpleGraph& g_;
  const VertexMask& allowed_;
  std::vector<Vertex> way_;
  const VertexMask* ends_;
  Budget& budget_;
  std::vector<Vertex> path_;
  VertexMask on_;
  std::vector<int> way_index_;
  std::vector<unsigned> seen_;
  unsigned stamp_ = 0;
};

bool arc_contains_run(const PathSeq& arc, const PathSeq& r) {
  if (r.empty()) return true;
  auto it = std::search(arc.vertices.begin(), arc.vertices.end(), r.vertices.begin(),
                        r.vertices.end());
  return it != arc.vertices.end();
}

// (ii) and (iii) for given vertex lists; the arcs come from the orientation.
bool pair_conditions(const SimpleGraph& g, const OrientedCycle& c, const VertexMask& in_a,
                     const PathSeq& arc1, const PathSeq& arc2, const PathSeq& r1,
                     const PathSeq& r2) {
  const int n = g.order();
  VertexMask in_r(static_cast<std::size_t>(n), 0);
  for (Vertex v : r1.vertices) in_r[v] = 1;
  for (Vertex v : r2.vertices) in_r[v] = 1;
  auto attached = [&](Vertex v) {
    for (Vertex w : g.neighbors(v)) {
      if (in_a[w]) return true;
    }
    return false;
  };
  for (int i = 0; i < 2; ++i) {
    const PathSeq& arc = i == 0 ? arc1 : arc2;
    const PathSeq& r = i == 0 ? r1 : r2;
    for (Vertex v : arc.vertices) {
      if (attached(v) && !r.contains(v)) return false;
    }
  }
  VertexMask on_c = mask_of(n, c.vertices());
  for (const PathSeq* r : {&r1, &r2}) {
    for (Vertex x : r->interior()) {
      for (Vertex w : g.neighbors(x)) {
        if (on_c[w] && !in_r[w]) return false;
      }
    }
  }
  return true;
}

const PatternMultigraph& kite_pattern() {
  static const PatternMultigraph h = PatternMultigraph::kite();
  return h;
}

}  // namespace

// ------------------------------------------------------------ separating pairs

std::optional<Vertex> SeparatingPair::r(int i, int j) const {
  const PathSeq& ri = R(i);
  if (ri.empty()) return std::nullopt;
  return i == j ? ri.front() : ri.back();
}

bool is_separating_pair(const SimpleGraph& g, const SeparatingPair& p) {
  if (!p.C.is_cycle_in(g) || p.u1 == p.u2 || !p.C.contains(p.u1) || !p.C.contains(p.u2)) {
    return false;
  }
  VertexMask in_a(static_cast<std::size_t>(g.order()), 0);
  for (Vertex a : p.A) {
    if (!g.contains(a) || p.C.contains(a)) return false;
    in_a[a] = 1;
  }
  PathSeq arc1 = interval(p.C, p.u1, p.u2);
  PathSeq arc2 = interval(p.C, p.u2, p.u1);
  if (!arc_contains_run(arc1, p.R1) || !arc_contains_run(arc2, p.R2)) return false;
  return pair_conditions(g, p.C, in_a, arc1, arc2, p.R1, p.R2);
}

SeparatingPair find_special_separating_pair(const SimpleGraph& g, const OrientedCycle& c,
                                            Vertex u1, Vertex u2,
                                            const std::vector<Vertex>& A) {
  c.position(u1);
  c.position(u2);
  if (u1 == u2) throw Error(ErrorCode::PreconditionViolated, "u1 and u2 must differ");
  if (A.empty()) throw Error(ErrorCode::PreconditionViolated, "A must be non-empty");
  const int n = g.order();
  VertexMask in_a(static_cast<std::size_t>(n), 0);
  for (Vertex a : A) {
    if (!g.contains(a)) throw Error(ErrorCode::RangeError, "A vertex out of range");
    if (c.contains(a)) throw Error(ErrorCode::PreconditionViolated, "A meets the cycle");
    in_a[a] = 1;
  }
  auto attached = [&](Vertex v) {
    for (Vertex w : g.neighbors(v)) {
      if (in_a[w]) return true;
    }
    return false;
  };

  std::optional<SeparatingPair> best;
  for (const OrientedCycle& o : {c, c.reversed()}) {
    PathSeq arc1 = interval(o, u1, u2);
    PathSeq arc2 = interval(o, u2, u1);
    // Candidate runs per arc: they must cover every attachment on it.
    auto candidates = [&](const PathSeq& arc) {
      int lo = -1, hi = -1;
      const int len = static_cast<int>(arc.size());
      for (int i = 0; i < len; ++i) {
        if (attached(arc.vertices[i])) {
          if (lo < 0) lo = i;
          hi = i;
        }
      }
      std::vector<PathSeq> out;
      if (lo < 0) out.emplace_back();
      for (int s = 0; s < len; ++s) {
        if (lo >= 0 && s > lo) break;
        for (int e = std::max(s, hi); e < len; ++e) {
          out.push_back(slice(arc, static_cast<std::size_t>(s), static_cast<std::size_t>(e)));
        }
      }
      return out;
    };
    auto c1 = candidates(arc1);
    auto c2 = candidates(arc2);
    for (const auto& r1 : c1) {
      for (const auto& r2 : c2) {
        std::size_t total = r1.size() + r2.size();
        if (best && total >= best->total()) continue;
        if (!pair_conditions(g, o, in_a, arc1, arc2, r1, r2)) continue;
        best = SeparatingPair{o, u1, u2, A, r1, r2};
      }
    }
  }
  // The two full arcs always qualify.
  return *best;
}

bool is_shortest_cycle_through(const SimpleGraph& g, const OrientedCycle& c, Vertex a, Vertex b) {
  VertexMask blocked(static_cast<std::size_t>(g.order()), 1);
  for (Vertex v : c.vertices()) blocked[v] = 0;
  Budget budget(std::numeric_limits<std::uint64_t>::max());
  for (int len = 3; len < static_cast<int>(c.size()); ++len) {
    if (for_each_cycle(g, a, b, len, blocked, budget, [](const auto&) { return true; })) {
      return false;
    }
  }
  return true;
}

ConnSepWitnesses connsep_witnesses(const SimpleGraph& g, const SeparatingPair& p, Vertex x,
                                   std::uint64_t budget) {
  auto inner = p.R1.interior();
  if (std::find(inner.begin(), inner.end(), x) == inner.end()) {
    throw Error(ErrorCode::PreconditionViolated, "x must lie in int(R1)");
  }
  if (!is_shortest_cycle_through(g, p.C, p.u1, p.u2)) {
    throw Error(ErrorCode::PreconditionViolated, "C is not a shortest u1-u2 cycle in G[V(C)]");
  }
  const int n = g.order();
  Budget b(budget);
  VertexMask in_a = mask_of(n, p.A);
  VertexMask on_c = mask_of(n, p.C.vertices());
  ConnSepWitnesses out;

  VertexMask ends(static_cast<std::size_t>(n), 0);
  for (Vertex v : p.C.vertices()) {
    for (Vertex w : g.neighbors(v)) {
      if (in_a[w]) ends[v] = 1;
    }
  }
  auto path_i = OrderedPath(g, on_c, {x, p.u1, p.u2}, &ends, b).run();
  if (!path_i) throw Error(ErrorCode::WitnessNotFound, "no ordered path for (i)");
  out.path_i = *path_i;
  out.a = path_i->back();

  VertexMask outside_a(static_cast<std::size_t>(n), 1);
  for (Vertex a : p.A) outside_a[a] = 0;
  if (!is_connected(g, &outside_a)) return out;

  VertexMask forbidden(static_cast<std::size_t>(n), 1);
  for (int v = 0; v < n; ++v) {
    if (on_c[v] || in_a[v]) forbidden[v] = 0;
  }
  for (Vertex v : inner) forbidden[v] = 1;
  CutOrPaths two;
  try {
    two = disjoint_paths(g, p.u1, p.u2, 2, &forbidden);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::AdjacentTerminalsNoCut) throw;
    throw Error(ErrorCode::WitnessNotFound, "no cycle for (ii)");
  }
  if (!two.found_paths()) throw Error(ErrorCode::WitnessNotFound, "no cycle for (ii)");
  for (auto& path : two.paths) {
    if (path.front() != p.u1) path = path.reversed();
  }
  std::vector<Vertex> cyc = two.paths[0].vertices;
  auto back = two.paths[1].interior();
  cyc.insert(cyc.end(), back.rbegin(), back.rend());
  out.cycle_ii = OrientedCycle(g, cyc);

  VertexMask ca(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) ca[v] = on_c[v] || in_a[v];
  for (Vertex x2 : p.R2.interior()) {
    auto path = OrderedPath(g, ca, {x, p.u1, p.u2, x2}, nullptr, b).run();
    if (!path) throw Error(ErrorCode::WitnessNotFound, "no ordered path for (iii)");
    out.paths_iii.push_back(*path);
  }
  return out;
}

// -------------------------------------------------------------------- flowers

std::string flower_defect(const SimpleGraph& g, const Flower& f) {
  const int n = g.order();
  for (int i = 0; i < 4; ++i) {
    if (!g.contains(f.u[i])) return "anchor out of range";
    for (int j = 0; j < i; ++j) {
      if (f.u[i] == f.u[j]) return "anchors not distinct";
    }
  }
  const Vertex u1 = f.u[0], u2 = f.u[1], u3 = f.u[2], u4 = f.u[3];
  for (int i = 1; i <= 3; ++i) {
    const auto& c = f.C(i);
    if (c.size() < 3 || !c.is_cycle_in(g)) return "C" + std::to_string(i) + " is not a cycle";
    for (Vertex v : c.vertices()) {
      if (!g.contains(v)) return "C" + std::to_string(i) + " vertex out of range";
    }
  }
  if (!f.C1.contains(u1)) return "u1 not on C1";
  if (!f.C2.contains(u3)) return "u3 not on C2";
  VertexMask in1 = mask_of(n, f.C1.vertices());
  VertexMask in2 = mask_of(n, f.C2.vertices());
  VertexMask in3 = mask_of(n, f.C3.vertices());
  for (int v = 0; v < n; ++v) {
    if (in1[v] && in2[v] && v != u2) return "C1 and C2 share a vertex other than u2";
    if (in3[v] && (in1[v] || in2[v])) return "C3 meets C1 or C2";
  }
  if (!in1[u2] || !in2[u2]) return "u2 not on both C1 and C2";
  VertexMask used(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= 3; ++i) {
    const auto& p = f.P(i);
    std::string name = "P" + std::to_string(i);
    if (p.empty() || !p.is_path_in(g)) return name + " is not a path";
    if (p.front() != f.u[i - 1]) return name + " does not start at u" + std::to_string(i);
    if (!in3[p.back()]) return name + " does not end on C3";
    for (Vertex v : p.interior()) {
      if (in1[v] || in2[v] || in3[v]) return name + " meets a cycle internally";
    }
    for (Vertex v : p.vertices) {
      if (used[v]) return "P paths are not disjoint";
      used[v] = 1;
    }
  }
  std::array<Vertex, 4> order{f.v(1), f.v(2), f.v(3), u4};
  for (int i = 0; i < 4; ++i) {
    if (!in3[order[i]]) return "u4 not on C3";
    for (int j = 0; j < i; ++j) {
      if (order[i] == order[j]) return "v1, v2, v3, u4 not distinct";
    }
  }
  std::size_t len = f.C3.size();
  std::array<std::size_t, 4> pos{};
  for (int i = 0; i < 4; ++i) pos[i] = f.C3.position(order[i]);
  bool fwd = cyclic_forward(len, pos[0], pos[1], pos[2], pos[3]);
  bool bwd = cyclic_forward(len, pos[3], pos[2], pos[1], pos[0]);
  if (!fwd && !bwd) return "v1, v2, v3, u4 out of order on C3";
  return {};
}

namespace {

// Flower enumeration shared by find_flower and extremal_flower. Cycles are
// generated by increasing length and |C1 ∪ C2| grows monotonically, which
// the extremal bound relies on.
class FlowerEnumerator {
 public:
  FlowerEnumerator(const SimpleGraph& g, std::array<Vertex, 4> u, Budget& budget, bool extremal)
      : g_(g), u_(u), budget_(budget), extremal_(extremal), n_(g.order()),
        in12_(static_cast<std::size_t>(n_), 0), in3_(static_cast<std::size_t>(n_), 0),
        used_(static_cast<std::size_t>(n_), 0) {}

  void run() {
    // |C1 ∪ C2| >= 5, and C3 carries four distinct vertices.
    for (int s = 5; s + 4 <= n_ && !stop_; ++s) {
      if (extremal_ && best_ && best_key_.path_vertices == 6 && best_key_.block >= n_ - s) return;
      s_ = s;
      for (int l1 = 3; l1 + 2 <= s && !stop_; ++l1) {
        int l2 = s + 1 - l1;
        VertexMask block1(static_cast<std::size_t>(n_), 0);
        block1[u_[2]] = block1[u_[3]] = 1;
        for_each_cycle(g_, u_[0], u_[1], l1, block1, budget_, [&](const std::vector<Vertex>& c1) {
          c1_ = c1;
          VertexMask block2(static_cast<std::size_t>(n_), 0);
          for (Vertex v : c1) block2[v] = 1;
          block2[u_[1]] = 0;
          block2[u_[3]] = 1;
          return for_each_cycle(g_, u_[1], u_[2], l2, block2, budget_,
                                [&](const std::vector<Vertex>& c2) {
                                  c2_ = c2;
                                  on_pair();
                                  return stop_;
                                });
        });
      }
    }
  }

  const std::optional<Flower>& best() const { return best_; }
  const FlowerKey& best_key() const { return best_key_; }

 private:
  void on_pair() {
    if (extremal_ && best_ && best_key_.path_vertices == 6 && best_key_.block >= n_ - s_) return;
    for (Vertex v : c1_) in12_[v] = 1;
    for (Vertex v : c2_) in12_[v] = 1;
    for (int l3 = 4; l3 <= n_ - s_ && !stop_; ++l3) {
      for_each_cycle(g_, u_[3], -1, l3, in12_, budget_, [&](const std::vector<Vertex>& c3) {
        c3_ = c3;
        on_c3();
        return stop_;
      });
    }
    for (Vertex v : c1_) in12_[v] = 0;
    for (Vertex v : c2_) in12_[v] = 0;
  }

  int block_size() {
    VertexFlow flow(g_);
    int size = static_cast<int>(c3_.size());
    for (int v = 0; v < n_; ++v) {
      if (in12_[v] || in3_[v]) continue;
      if (flow.count_to_set(v, in3_, 2, &in12_) >= 2) ++size;
    }
    return size;
  }

  void on_c3() {
    for (Vertex v : c3_) in3_[v] = 1;
    bool skip = false;
    if (extremal_ && best_ && best_key_.path_vertices == 6) {
      int b = block_size();
      // Optimistic key: single-edge paths with this block; when B fills H
      // the component lists are empty and cannot improve a tie.
      skip = best_key_.block > b || (best_key_.block == b && b == n_ - s_);
    }
    if (!skip) {
      bound_ = extremal_ && best_ ? best_key_.path_vertices : std::numeric_limits<int>::max();
      paths_[0].vertices.clear();
      search_path(0, 0);
    }
    for (Vertex v : c3_) in3_[v] = 0;
  }

  // Builds P_i starting at u_i; `sum` counts vertices of finished paths.
  void search_path(int i, int sum) {
    if (i == 3) {
      complete_flower();
      return;
    }
    PathSeq& p = paths_[i];
    p.vertices.assign(1, u_[i]);
    used_[u_[i]] = 1;
    extend(i, sum);
    used_[u_[i]] = 0;
  }

  void extend(int i, int sum) {
    PathSeq& p = paths_[i];
    Vertex v = p.back();
    int len = static_cast<int>(p.size());
    // Finishing here adds one vertex; later paths need at least two each.
    int rest = 2 * (2 - i);
    if (sum + len + 1 + rest > bound_) return;
    for (Vertex w : g_.neighbors(v)) {
      if (!in3_[w] || w == u_[3] || used_[w]) continue;
      budget_.tick();
      p.vertices.push_back(w);
      used_[w] = 1;
      search_path(i + 1, sum + len + 1);
      used_[w] = 0;
      p.vertices.pop_back();
      if (stop_) return;
    }
    if (sum + len + 2 + rest > bound_) return;
    for (Vertex w : g_.neighbors(v)) {
      if (in3_[w] || in12_[w] || used_[w]) continue;
      budget_.tick();
      p.vertices.push_back(w);
      used_[w] = 1;
      extend(i, sum);
      used_[w] = 0;
      p.vertices.pop_back();
      if (stop_) return;
    }
  }

  void complete_flower() {
    std::size_t len = c3_.size();
    auto pos = [&](Vertex v) {
      return static_cast<std::size_t>(std::find(c3_.begin(), c3_.end(), v) - c3_.begin());
    };
    std::size_t a = pos(paths_[0].back()), b = pos(paths_[1].back()), c = pos(paths_[2].back()),
                d = pos(u_[3]);
    std::vector<Vertex> c3 = c3_;
    if (!cyclic_forward(len, a, b, c, d)) {
      if (!cyclic_forward(len, d, c, b, a)) return;
      std::reverse(c3.begin(), c3.end());
    }
    Flower f;
    f.u = u_;
    f.C1 = OrientedCycle::unchecked(c1_);
    f.C2 = OrientedCycle::unchecked(c2_);
    f.C3 = OrientedCycle::unchecked(std::move(c3));
    f.P1 = paths_[0];
    f.P2 = paths_[1];
    f.P3 = paths_[2];
    if (!extremal_) {
      best_ = std::move(f);
      stop_ = true;
      return;
    }
    FlowerKey key = flower_key(g_, f);
    if (!best_ || better(key, best_key_)) {
      best_ = std::move(f);
      best_key_ = std::move(key);
      bound_ = best_key_.path_vertices;
    }
  }

  const SimpleGraph& g_;
  std::array<Vertex, 4> u_;
  Budget& budget_;
  bool extremal_;
  int n_;
  int s_ = 0;
  int bound_ = 0;
  bool stop_ = false;
  std::vector<Vertex> c1_, c2_, c3_;
  VertexMask in12_, in3_, used_;
  std::array<PathSeq, 3> paths_;
  std::optional<Flower> best_;
  FlowerKey best_key_;
};

void check_anchors(const SimpleGraph& g, std::array<Vertex, 4> u) {
  for (int i = 0; i < 4; ++i) {
    if (!g.contains(u[i])) throw Error(ErrorCode::PreconditionViolated, "anchor out of range");
    for (int j = 0; j < i; ++j) {
      if (u[i] == u[j]) throw Error(ErrorCode::PreconditionViolated, "anchors must be distinct");
    }
  }
}

}  // namespace

std::optional<Flower> find_flower(const SimpleGraph& g, Vertex u1, Vertex u2, Vertex u3,
                                  Vertex u4, std::uint64_t budget) {
  check_anchors(g, {u1, u2, u3, u4});
  Budget b(budget);
  // Exchanging u1 and u3 maps flowers to flowers (swap C1/C2 and P1/P3,
  // reverse C3), so the swapped roles need no second pass.
  FlowerEnumerator e(g, {u1, u2, u3, u4}, b, false);
  e.run();
  return e.best();
}

bool better(const FlowerKey& a, const FlowerKey& b) {
  if (a.path_vertices != b.path_vertices) return a.path_vertices < b.path_vertices;
  if (a.block != b.block) return a.block > b.block;
  if (a.attached != b.attached) return a.attached > b.attached;
  return a.detached > b.detached;
}

FlowerKey flower_key(const SimpleGraph& g, const Flower& f) {
  const int n = g.order();
  FlowerKey key;
  for (int i = 1; i <= 3; ++i) key.path_vertices += static_cast<int>(f.P(i).size());
  VertexMask in12 = mask_of(n, f.C1.vertices());
  for (Vertex v : f.C2.vertices()) in12[v] = 1;
  VertexMask in3 = mask_of(n, f.C3.vertices());
  VertexFlow flow(g);
  VertexMask removed = in12;
  for (int v = 0; v < n; ++v) {
    if (in12[v]) continue;
    if (in3[v] || flow.count_to_set(v, in3, 2, &in12) >= 2) {
      removed[v] = 1;
      ++key.block;
    }
  }
  VertexMask on_f(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= 3; ++i) {
    for (Vertex v : f.P(i).vertices) on_f[v] = 1;
  }
  std::vector<int> label;
  int count = components(g, label, &removed);
  std::vector<int> size(static_cast<std::size_t>(count), 0);
  std::vector<char> meets(static_cast<std::size_t>(count), 0);
  for (int v = 0; v < n; ++v) {
    if (label[v] < 0) continue;
    ++size[label[v]];
    if (on_f[v]) meets[label[v]] = 1;
  }
  for (int c = 0; c < count; ++c) (meets[c] ? key.attached : key.detached).push_back(size[c]);
  std::sort(key.attached.rbegin(), key.attached.rend());
  std::sort(key.detached.rbegin(), key.detached.rend());
  return key;
}

ExtremalFlower extremal_flower(const SimpleGraph& g, Vertex u1, Vertex u2, Vertex u3, Vertex u4,
                               std::uint64_t budget) {
  check_anchors(g, {u1, u2, u3, u4});
  Budget b(budget);
  FlowerEnumerator e(g, {u1, u2, u3, u4}, b, true);
  bool complete = true;
  try {
    e.run();
  } catch (const Error& err) {
    if (err.code() != ErrorCode::Exhausted || !e.best()) throw;
    complete = false;
  }
  if (!e.best()) throw Error(ErrorCode::NoFlower, "no flower for these anchors");
  return {*e.best(), e.best_key(), complete, b.used()};
}

ExtremalConclusions check_extremal_conclusions(const SimpleGraph& g, const Flower& f) {
  const int n = g.order();
  ExtremalConclusions out;
  out.shortest_cycles = is_shortest_cycle_through(g, f.C1, f.u[0], f.u[1]) &&
                       is_shortest_cycle_through(g, f.C2, f.u[1], f.u[2]);
  out.single_edge_paths = f.P1.size() == 2 && f.P2.size() == 2 && f.P3.size() == 2;
  VertexMask in12 = mask_of(n, f.C1.vertices());
  for (Vertex v : f.C2.vertices()) in12[v] = 1;
  out.rest_three_connected = is_k_connected(g.without_vertices(in12), 3);
  return out;
}

bool attachments_confined(const SimpleGraph& g, const Flower& f) {
  const int n = g.order();
  OrientedCycle c3 = f.C3;
  std::size_t len = c3.size();
  if (!cyclic_forward(len, c3.position(f.v(1)), c3.position(f.v(2)), c3.position(f.v(3)),
                      c3.position(f.u[3]))) {
    c3 = c3.reversed();
  }
  VertexMask in12 = mask_of(n, f.C1.vertices());
  for (Vertex v : f.C2.vertices()) in12[v] = 1;
  for (int i = 1; i <= 2; ++i) {
    VertexMask allowed = mask_of(n, interval(c3, f.v(i), f.v(i + 1)).vertices);
    for (Vertex x : f.C(i).vertices()) {
      if (x == f.u[1]) continue;
      for (Vertex y : g.neighbors(x)) {
        if (!in12[y] && !allowed[y]) return false;
      }
    }
  }
  return true;
}

// -------------------------------------------------------------- flower or kite

void check_q_system(const SimpleGraph& g, Vertex u1, Vertex u2, Vertex u3, Vertex u4,
                    const QSystem& q) {
  check_anchors(g, {u1, u2, u3, u4});
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::PreconditionViolated, "Q-system: " + why);
  };
  const int n = g.order();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  std::vector<Edge> direct;
  for (int k = 0; k < 7; ++k) {
    const PathSeq& p = q[k];
    std::string name = "Q" + std::to_string(k + 1);
    for (Vertex v : p.vertices) {
      if (!g.contains(v)) fail(name + " leaves the graph");
    }
    if (p.size() < 2 || !p.is_path_in(g)) fail(name + " is not a path");
    Vertex a = k == 0 ? u1 : k <= 3 ? u1 : u2;
    Vertex b = k == 0 ? u3 : k <= 3 ? u2 : u3;
    bool ends_ok = (p.front() == a && p.back() == b) || (p.front() == b && p.back() == a);
    if (!ends_ok) fail(name + " has the wrong ends");
    if (p.contains(u4)) fail(name + " meets u4");
    for (Vertex v : p.interior()) {
      if (v == u1 || v == u2 || v == u3) fail(name + " passes through an anchor");
      if (owner[v] >= 0) fail("Q" + std::to_string(owner[v] + 1) + " and " + name + " share a vertex");
      owner[v] = k;
    }
    if (p.size() == 2) {
      Edge e{std::min(a, b), std::max(a, b)};
      if (std::find(direct.begin(), direct.end(), e) != direct.end()) fail(name + " repeats an edge");
      direct.push_back(e);
    }
  }
}

std::optional<QSystem> find_q_system(const SimpleGraph& g, Vertex u1, Vertex u2, Vertex u3,
                                     Vertex u4, std::uint64_t budget) {
  check_anchors(g, {u1, u2, u3, u4});
  VertexMask removed(static_cast<std::size_t>(g.order()), 0);
  removed[u4] = 1;
  std::vector<Vertex> old;
  SimpleGraph h = g.without_vertices(removed, &old);
  auto to_new = [&](Vertex v) { return v > u4 ? v - 1 : v; };
  auto r = find_fat_triangle_linkage(h, to_new(u1), to_new(u2), to_new(u3), 3, 3, 1, budget);
  if (r.status == LinkStatus::Exhausted) throw Error(ErrorCode::Exhausted, "Q-system search budget");
  if (!r.linked()) return std::nullopt;
  auto back = [&](const PathSeq& p) {
    PathSeq out;
    for (Vertex v : p.vertices) out.vertices.push_back(old[v]);
    return out;
  };
  const auto& routes = r.subdivision->routes;
  QSystem q;
  q[0] = back(routes[6]);
  for (int i = 0; i < 6; ++i) q[i + 1] = back(routes[i]);
  return q;
}

FlowerOrKite flower_or_kite(const SimpleGraph& g, Vertex u1, Vertex u2, Vertex u3, Vertex u4,
                            const QSystem& q_in, std::uint64_t budget) {
  check_q_system(g, u1, u2, u3, u4, q_in);
  const int n = g.order();
  // Q[0] runs u1 -> u3, the side paths start at u2.
  QSystem q = q_in;
  if (q[0].front() != u1) q[0] = q[0].reversed();
  for (int k = 1; k < 7; ++k) {
    if (q[k].front() != u2) q[k] = q[k].reversed();
  }

  VertexMask forbid(static_cast<std::size_t>(n), 0);
  forbid[u1] = forbid[u3] = 1;
  CutOrPaths fan5;
  try {
    fan5 = disjoint_paths(g, u4, u2, 5, &forbid);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::AdjacentTerminalsNoCut) throw;
    throw Error(ErrorCode::PreconditionViolated, "no 5-fan from u4 to u2 avoiding u1, u3");
  }
  if (!fan5.found_paths()) {
    throw Error(ErrorCode::PreconditionViolated, "no 5-fan from u4 to u2 avoiding u1, u3");
  }
  std::vector<PathSeq> P = fan5.paths;
  for (auto& p : P) {
    if (p.front() != u4) p = p.reversed();
  }

  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < 7; ++k) {
    for (Vertex v : q[k].interior()) owner[v] = k;
  }
  const int q1_len = static_cast<int>(q[0].size());
  std::vector<int> pos1(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < q1_len; ++i) pos1[q[0].vertices[i]] = i;
  auto on_q = [&](Vertex v) { return owner[v] >= 0 || v == u1 || v == u2 || v == u3; };
  auto side = [&](Vertex v) { return owner[v] >= 1 || v == u2; };

  const Placement kite_at{{u2, u1, u3, u4}};
  // Completes a kite from a u1-u3 route and a u2-u4 route that used side
  // path `used` (or none), picking the remaining side paths.
  auto kite = [&](const PathSeq& r13, const PathSeq& r24, int used) -> std::optional<Subdivision> {
    for (int a = 1; a <= 3; ++a) {
      for (int b = 4; b <= 6; ++b) {
        if (a == used || b == used) continue;
        Subdivision s{kite_at, {q[a], r13, q[b], r24}};
        if (validate_subdivision(g, kite_pattern(), s)) return s;
      }
    }
    return std::nullopt;
  };
  // Q_m from u2 to v (v on side path m, or u2 itself).
  auto side_prefix = [&](Vertex v) {
    if (v == u2) return PathSeq{{u2}};
    return segment(q[owner[v]], u2, v);
  };

  auto construct = [&]() -> std::optional<FlowerOrKite> {
    // First vertex of each fan path on a Q path.
    std::vector<std::size_t> first(5);
    for (int i = 0; i < 5; ++i) {
      const auto& p = P[i];
      std::size_t t = 1;
      while (!on_q(p.vertices[t])) ++t;
      first[i] = t;
      Vertex v = p.vertices[t];
      if (pos1[v] > 0 && pos1[v] < q1_len - 1) continue;
      auto r24 = join({side_prefix(v), slice(p, t, 0)});
      int used = v == u2 ? -1 : owner[v];
      if (auto s = kite(q[0], r24, used)) return FlowerOrKite{*s, "kite:fan-meets-side-path"};
      return std::nullopt;
    }
    // Relabel so that w_1..w_5 occur along Q1 from u1.
    std::vector<int> idx{0, 1, 2, 3, 4};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return pos1[P[a].vertices[first[a]]] < pos1[P[b].vertices[first[b]]];
    });
    std::vector<PathSeq> F;
    std::vector<std::size_t> tw;
    for (int i : idx) {
      F.push_back(P[i]);
      tw.push_back(first[i]);
    }
    const int lo = pos1[F[0].vertices[tw[0]]];
    const int hi = pos1[F[4].vertices[tw[4]]];
    auto in_window = [&](Vertex v) { return pos1[v] >= lo && pos1[v] <= hi; };
    // w_i'' and w_i' as indices along each fan path.
    std::vector<std::size_t> t2(5), t1(5);
    for (int i = 0; i < 5; ++i) {
      std::size_t t = 1;
      while (!side(F[i].vertices[t])) ++t;
      t2[i] = t;
      std::size_t s = t;
      while (!in_window(F[i].vertices[s])) --s;
      t1[i] = s;
    }
    // u1' and u3': extreme Q1 hits over the prefixes up to w_i''.
    int best1 = q1_len, best3 = -1;
    int f1 = -1, f3 = -1;
    std::size_t s1 = 0, s3 = 0;
    for (int i = 0; i < 5; ++i) {
      for (std::size_t t = 1; t < t2[i]; ++t) {
        int pv = pos1[F[i].vertices[t]];
        if (pv <= 0 || pv >= q1_len - 1) continue;
        if (pv < best1) best1 = pv, f1 = i, s1 = t;
        if (pv > best3) best3 = pv, f3 = i, s3 = t;
      }
    }
    const PathSeq& Q1 = q[0];
    auto q1_slice = [&](int a, int b) {
      return slice(Q1, static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    };
    auto to_u2 = [&](int i, std::size_t from) {
      // F_i from index `from` to w_i'', then along the side path to u2.
      Vertex w2 = F[i].vertices[t2[i]];
      return join({slice(F[i], from, t2[i]), side_prefix(w2).reversed()});
    };
    auto used_side = [&](int i) {
      Vertex w2 = F[i].vertices[t2[i]];
      return w2 == u2 ? -1 : owner[w2];
    };

    if (f1 == f3) {
      auto r13 = join({q1_slice(0, best1), slice(F[f1], s1, s3), q1_slice(best3, q1_len - 1)});
      for (int j = 0; j < 5; ++j) {
        if (j == f1) continue;
        if (auto s = kite(r13, to_u2(j, 0), used_side(j))) {
          return FlowerOrKite{*s, "kite:extremes-on-one-fan"};
        }
      }
      return std::nullopt;
    }

    // u1'' and u3'': walk back from u1', u3' to the window [w1, w5].
    std::size_t r1 = s1, r3 = s3;
    while (!in_window(F[f1].vertices[r1])) --r1;
    while (!in_window(F[f3].vertices[r3])) --r3;
    const int p1 = pos1[F[f1].vertices[r1]];
    const int p3 = pos1[F[f3].vertices[r3]];

    std::vector<Vertex> c3 = slice(F[0], 0, tw[0]).vertices;
    for (int i = lo + 1; i <= hi; ++i) c3.push_back(Q1.vertices[i]);
    for (std::size_t t = tw[4] - 1; t >= 1; --t) c3.push_back(F[4].vertices[t]);

    for (int k = 0; k < 5; ++k) {
      if (k == f1 || k == f3) continue;
      const int pk = pos1[F[k].vertices[t1[k]]];
      const int m = used_side(k);
      if (p1 > pk) {
        auto r24 = join({slice(F[0], 0, tw[0]), q1_slice(lo, pk), to_u2(k, t1[k])});
        auto r13 = join({q1_slice(0, best1), slice(F[f1], s1, r1), q1_slice(p1, q1_len - 1)});
        if (auto s = kite(r13, r24, m)) return FlowerOrKite{*s, "kite:u1-attachment-past-fan"};
        continue;
      }
      if (p3 < pk) {
        auto r24 = join({slice(F[4], 0, tw[4]), q1_slice(hi, pk), to_u2(k, t1[k])});
        auto r13 = join({q1_slice(0, p3), slice(F[f3], r3, s3), q1_slice(best3, q1_len - 1)});
        if (auto s = kite(r13, r24, m)) return FlowerOrKite{*s, "kite:u3-attachment-before-fan"};
        continue;
      }
      Flower f;
      f.u = {u1, u2, u3, u4};
      f.C3 = OrientedCycle::unchecked(c3);
      f.P1 = join({q1_slice(0, best1), slice(F[f1], s1, r1)});
      f.P3 = join({q1_slice(q1_len - 1, best3), slice(F[f3], s3, r3)});
      f.P2 = to_u2(k, t1[k]).reversed();
      auto cycle_of = [&](int a, int b) {
        std::vector<Vertex> vs = q[a].vertices;
        auto inner = q[b].interior();
        vs.insert(vs.end(), inner.rbegin(), inner.rend());
        return OrientedCycle::unchecked(vs);
      };
      for (int a = 1; a <= 3; ++a) {
        for (int b = a + 1; b <= 3; ++b) {
          if (a == m || b == m) continue;
          for (int c = 4; c <= 6; ++c) {
            for (int d = c + 1; d <= 6; ++d) {
              if (c == m || d == m) continue;
              f.C1 = cycle_of(a, b);
              f.C2 = cycle_of(c, d);
              if (verify_flower(g, f)) return FlowerOrKite{f, "flower:constructed"};
            }
          }
        }
      }
    }
    return std::nullopt;
  };

  if (auto out = construct()) return *out;

  auto kr = find_kite_linkage(g, u2, u1, u3, u4, budget);
  if (kr.status == LinkStatus::Exhausted) throw Error(ErrorCode::Exhausted, "kite search budget");
  if (kr.linked()) return FlowerOrKite{*kr.subdivision, "search:kite", true};
  if (auto f = find_flower(g, u1, u2, u3, u4, budget)) return FlowerOrKite{*f, "search:flower", true};
  throw Error(ErrorCode::CaseAnalysisIncomplete, "neither a kite nor a flower was found");
}

// ------------------------------------------------------------------ 2-linkage

std::optional<Subdivision> two_disjoint_paths(const SimpleGraph& g, Vertex s1, Vertex t1,
                                              Vertex s2, Vertex t2, std::uint64_t budget) {
  static const PatternMultigraph h = PatternMultigraph::matching(2);
  auto r = find_subdivision(g, h, Placement{{s1, t1, s2, t2}}, budget);
  if (r.status == LinkStatus::Exhausted) throw Error(ErrorCode::Exhausted, "2-linkage budget");
  return r.subdivision;
}

}  // namespace hlink
