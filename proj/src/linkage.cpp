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

#include "hlink/linkage.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "hlink/connectivity.hpp"
#include "hlink/generators.hpp"
#include "hlink/mader.hpp"
#include "hlink/parallel.hpp"

namespace hlink {

const char* to_string(LinkStatus s) noexcept {
  switch (s) {
    case LinkStatus::Linked: return "Linked";
    case LinkStatus::NotLinked: return "NotLinked";
    case LinkStatus::Exhausted: return "Exhausted";
  }
  return "?";
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Linked: return "linked";
    case Verdict::NotLinked: return "not-linked";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

class RouteSearch {
 public:
  RouteSearch(const SimpleGraph& g, const PatternMultigraph& h, const Placement& phi,
              std::vector<int> order, std::uint64_t budget)
      : g_(g), h_(h), phi_(phi), order_(std::move(order)), budget_(budget), flow_(g) {
    const int n = g.order();
    busy_.assign(static_cast<std::size_t>(n), 0);
    seen_.assign(static_cast<std::size_t>(n), 0);
    for (Vertex v : phi.images) busy_[v] = 1;
    routes_.resize(h.edge_count());
    const auto edges = h.edges();
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const PatternEdge& e = edges[order_[i]];
      int lo = std::min(e.a, e.b), hi = std::max(e.a, e.b);
      ends_.push_back({phi[lo], phi[hi]});
      pair_.push_back({lo, hi});
      int prev = -1;
      for (std::size_t j = 0; j < i; ++j)
        if (pair_[j] == pair_[i]) prev = static_cast<int>(j);
      prev_same_.push_back(prev);
    }
  }

  LinkageResult run() {
    LinkageResult out;
    bool found = route(0);
    out.nodes_explored = nodes_;
    if (found) {
      const auto edges = h_.edges();
      for (std::size_t i = 0; i < routes_.size(); ++i) {
        if (edges[i].a > edges[i].b) routes_[i] = routes_[i].reversed();
      }
      out.status = LinkStatus::Linked;
      out.complete = true;
      out.subdivision = Subdivision{phi_, routes_};
    } else if (out_of_budget_) {
      out.status = LinkStatus::Exhausted;
    } else {
      out.status = LinkStatus::NotLinked;
      out.complete = true;
    }
    return out;
  }

 private:
  bool route(std::size_t idx) {
    if (idx == order_.size()) return true;
    if (!feasible(idx)) return false;
    auto& path = routes_[order_[idx]].vertices;
    path.assign(1, ends_[idx].first);
    bool ok = extend(idx);
    if (!ok) path.clear();
    return ok;
  }

  bool extend(std::size_t idx) {
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      return false;
    }
    auto& path = routes_[order_[idx]].vertices;
    const Vertex cur = path.back();
    const Vertex target = ends_[idx].second;
    Vertex floor = -1;
    if (path.size() == 1 && prev_same_[idx] >= 0) {
      floor = routes_[order_[prev_same_[idx]]].vertices[1];
    }
    for (Vertex w : g_.neighbors(cur)) {
      if (w <= floor) continue;
      if (w == target) {
        path.push_back(w);
        if (route(idx + 1)) return true;
        path.pop_back();
        if (out_of_budget_) return false;
        continue;
      }
      if (busy_[w]) continue;
      busy_[w] = 1;
      if (reaches(w, target)) {
        path.push_back(w);
        if (extend(idx)) return true;
        path.pop_back();
      }
      busy_[w] = 0;
      if (out_of_budget_) return false;
    }
    return false;
  }

  // Whether `target` is adjacent to something reachable from `from` through
  // free vertices.
  bool reaches(Vertex from, Vertex target) {
    stamp_++;
    if (stamp_ == 0) {
      std::fill(seen_.begin(), seen_.end(), 0);
      stamp_ = 1;
    }
    stack_.assign(1, from);
    seen_[from] = stamp_;
    while (!stack_.empty()) {
      Vertex x = stack_.back();
      stack_.pop_back();
      if (g_.adjacent(x, target)) return true;
      for (Vertex y : g_.neighbors(x)) {
        if (busy_[y] || seen_[y] == stamp_) continue;
        seen_[y] = stamp_;
        stack_.push_back(y);
      }
    }
    return false;
  }

  // Necessary conditions for routing positions idx.. given current usage:
  // each placed vertex keeps enough free exits, and each remaining pattern
  // pair still has enough disjoint connections.
  bool feasible(std::size_t idx) {
    const int m = h_.order();
    need_.assign(static_cast<std::size_t>(m), 0);
    for (std::size_t i = idx; i < order_.size(); ++i) {
      need_[pair_[i].first]++;
      need_[pair_[i].second]++;
    }
    for (int a = 0; a < m; ++a) {
      if (need_[a] == 0) continue;
      int exits = 0;
      for (Vertex w : g_.neighbors(phi_[a])) {
        if (!busy_[w]) ++exits;
      }
      // Placed neighbors may still be reached by one direct route each.
      for (int b = 0; b < m; ++b) {
        if (b == a || !g_.adjacent(phi_[a], phi_[b])) continue;
        for (std::size_t i = idx; i < order_.size(); ++i) {
          if (pair_[i] == std::make_pair(std::min(a, b), std::max(a, b))) {
            ++exits;
            break;
          }
        }
      }
      if (exits < need_[a]) return false;
    }
    for (std::size_t i = idx; i < order_.size(); ++i) {
      bool first = true;
      int mult = 0;
      for (std::size_t j = idx; j < order_.size(); ++j) {
        if (pair_[j] != pair_[i]) continue;
        if (j < i) first = false;
        ++mult;
      }
      if (!first) continue;
      if (flow_.count(ends_[i].first, ends_[i].second, mult, &busy_) < mult) return false;
    }
    return true;
  }

  const SimpleGraph& g_;
  const PatternMultigraph& h_;
  const Placement& phi_;
  std::vector<int> order_;
  std::vector<std::pair<Vertex, Vertex>> ends_;
  std::vector<std::pair<int, int>> pair_;
  std::vector<int> prev_same_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  VertexFlow flow_;
  VertexMask busy_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
  std::vector<Vertex> stack_;
  std::vector<int> need_;
  std::vector<PathSeq> routes_;
};

std::vector<int> default_order(const PatternMultigraph& h, const Placement& phi) {
  const auto edges = h.edges();
  std::vector<int> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int i) {
    const PatternEdge& e = edges[i];
    Vertex x = phi[e.a], y = phi[e.b];
    return std::make_tuple(-(h.degree(e.a) + h.degree(e.b)), std::min(x, y), std::max(x, y), i);
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
  return order;
}

}  // namespace

LinkageResult find_subdivision(const SimpleGraph& g, const PatternMultigraph& h,
                               const Placement& phi, std::span<const int> edge_order,
                               std::uint64_t budget) {
  if (budget == 0) throw Error(ErrorCode::BudgetNonPositive, "search budget must be positive");
  phi.check(h, g);
  std::vector<int> order(edge_order.begin(), edge_order.end());
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  bool permutation = sorted.size() == h.edge_count();
  for (std::size_t i = 0; permutation && i < sorted.size(); ++i)
    permutation = sorted[i] == static_cast<int>(i);
  if (!permutation) throw Error(ErrorCode::ParameterError, "edge order must permute the pattern edges");
  return RouteSearch(g, h, phi, std::move(order), budget).run();
}

LinkageResult find_subdivision(const SimpleGraph& g, const PatternMultigraph& h,
                               const Placement& phi, std::uint64_t budget) {
  if (budget == 0) throw Error(ErrorCode::BudgetNonPositive, "search budget must be positive");
  phi.check(h, g);
  return RouteSearch(g, h, phi, default_order(h, phi), budget).run();
}

LinkageResult find_kite_linkage(const SimpleGraph& g, Vertex u2, Vertex u1, Vertex u3,
                                Vertex u4, std::uint64_t budget) {
  static const PatternMultigraph kite = PatternMultigraph::kite();
  static constexpr std::array<int, 4> order{0, 1, 2, 3};
  return find_subdivision(g, kite, Placement{{u2, u1, u3, u4}}, order, budget);
}

namespace {

LinkageResult fat_triangle_fallback(const SimpleGraph& g, const PatternMultigraph& h,
                                    const Placement& phi, std::uint64_t budget,
                                    std::uint64_t spent) {
  std::uint64_t left = budget > spent ? budget - spent : 1;
  LinkageResult r = find_subdivision(g, h, phi, left);
  r.nodes_explored += spent;
  return r;
}

}  // namespace

LinkageResult find_fat_triangle_linkage(const SimpleGraph& g, Vertex v1, Vertex v2, Vertex v3,
                                        int k1, int k2, int k3, std::uint64_t budget) {
  if (budget == 0) throw Error(ErrorCode::BudgetNonPositive, "search budget must be positive");
  if (k1 < 0 || k2 < 0 || k3 < 0) throw Error(ErrorCode::ParameterError, "negative multiplicity");
  if (k1 + k2 + k3 == 0) {
    throw Error(ErrorCode::DegenerateParameters, "all fat-triangle multiplicities are zero");
  }
  const PatternMultigraph h = PatternMultigraph::fat_triangle(k1, k2, k3);
  const Placement phi{{v1, v2, v3}};
  phi.check(h, g);

  const std::array<Vertex, 3> v{v1, v2, v3};
  std::array<int, 3> need{k1, k2, k3};
  // side i joins v[i] and v[(i+1)%3]; routes stored per side from v[i].
  std::array<std::vector<PathSeq>, 3> side_routes;
  SimpleGraph work = g;
  for (int i = 0; i < 3; ++i) {
    Vertex a = v[i], b = v[(i + 1) % 3];
    if (need[i] > 0 && g.adjacent(a, b)) {
      side_routes[i].push_back(PathSeq{{a, b}});
      need[i]--;
      work = work.without_edge(a, b);
    }
  }

  LinkageResult out;
  auto finish = [&]() -> LinkageResult {
    Subdivision s;
    s.placement = phi;
    for (int i = 0; i < 3; ++i)
      for (auto& p : side_routes[i]) s.routes.push_back(p);
    if (!validate_subdivision(g, h, s)) return fat_triangle_fallback(g, h, phi, budget, out.nodes_explored);
    out.status = LinkStatus::Linked;
    out.subdivision = std::move(s);
    return out;
  };
  auto not_linked = [&]() {
    out.status = LinkStatus::NotLinked;
    out.complete = true;
    return out;
  };

  int positive = 0;
  for (int x : need) positive += x > 0 ? 1 : 0;
  const int n = g.order();

  if (positive == 0) return finish();

  if (positive == 1) {
    int i = need[0] > 0 ? 0 : (need[1] > 0 ? 1 : 2);
    Vertex a = v[i], b = v[(i + 1) % 3], c = v[(i + 2) % 3];
    VertexMask forbid(static_cast<std::size_t>(n), 0);
    forbid[c] = 1;
    VertexFlow flow(work);
    if (flow.count(a, b, need[i], &forbid) < need[i]) return not_linked();
    for (auto& p : flow.paths()) side_routes[i].push_back(std::move(p));
    return finish();
  }

  if (positive == 2) {
    // The zero side is (z, z+1); both positive sides meet at the vertex
    // opposite it, which fans out to copies of the other two.
    int z = need[0] == 0 ? 0 : (need[1] == 0 ? 1 : 2);
    int sa = (z + 1) % 3, sb = (z + 2) % 3;  // sides (z+1, z+2) and (z+2, z)
    Vertex hub = v[(z + 2) % 3];
    Vertex end_a = v[(z + 1) % 3];  // other end of side sa
    Vertex end_b = v[z];            // other end of side sb
    Duplication d = duplicate_vertices(work, {{end_a, need[sa]}, {end_b, need[sb]}});
    std::vector<Vertex> targets = d.copies[end_a];
    targets.insert(targets.end(), d.copies[end_b].begin(), d.copies[end_b].end());
    Vertex hub_new = d.copies[hub][0];
    VertexFlow flow(d.graph);
    VertexMask sinks(d.origin.size(), 0);
    for (Vertex t : targets) sinks[t] = 1;
    int want = need[sa] + need[sb];
    if (flow.count_to_set(hub_new, sinks, want) < want) return not_linked();
    for (const auto& p : flow.paths()) {
      PathSeq q;
      for (Vertex x : p.vertices) q.vertices.push_back(d.origin[x]);
      side_routes[q.back() == end_a ? sa : sb].push_back(std::move(q));
    }
    for (auto& p : side_routes[sa]) {
      if (p.front() != v[sa]) p = p.reversed();
    }
    for (auto& p : side_routes[sb]) {
      if (p.front() != v[sb]) p = p.reversed();
    }
    return finish();
  }

  // Three positive sides: copies of v_i carry the demand of both incident
  // sides, and every copy ends exactly one good path.
  const int total = need[0] + need[1] + need[2];
  Duplication d = duplicate_vertices(
      work, {{v[0], need[0] + need[2]}, {v[1], need[0] + need[1]}, {v[2], need[1] + need[2]}});
  GroupedTerminals groups{{d.copies[v[0]], d.copies[v[1]], d.copies[v[2]]}};
  GoodPaths gp = max_good_paths(d.graph, groups, budget, total);
  out.nodes_explored += gp.nodes;
  if (!gp.complete) return fat_triangle_fallback(g, h, phi, budget, out.nodes_explored);
  if (gp.count < total) return not_linked();
  for (const auto& p : gp.paths) {
    PathSeq q;
    for (Vertex x : p.vertices) q.vertices.push_back(d.origin[x]);
    int side = -1;
    for (int i = 0; i < 3; ++i) {
      Vertex a = v[i], b = v[(i + 1) % 3];
      if (q.front() == a && q.back() == b) side = i;
      if (q.front() == b && q.back() == a) {
        side = i;
        q = q.reversed();
      }
    }
    if (side < 0) return fat_triangle_fallback(g, h, phi, budget, out.nodes_explored);
    side_routes[side].push_back(std::move(q));
  }
  for (int i = 0; i < 3; ++i) {
    if (side_routes[i].size() != static_cast<std::size_t>(i == 0 ? k1 : (i == 1 ? k2 : k3))) {
      return fat_triangle_fallback(g, h, phi, budget, out.nodes_explored);
    }
  }
  return finish();
}

std::vector<Placement> quotient_placements(const SimpleGraph& g, const PatternMultigraph& h) {
  const int n = g.order(), m = h.order();
  std::vector<Placement> out;
  if (m > n) return out;
  std::vector<Vertex> cur(static_cast<std::size_t>(m));
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  const auto autos = h.automorphisms();
  std::vector<Vertex> image(static_cast<std::size_t>(m));
  auto canonical = [&]() {
    for (const Permutation& s : autos) {
      for (int v = 0; v < m; ++v) image[v] = cur[s[v]];
      if (image < cur) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == m) {
      if (canonical()) out.push_back(Placement{cur});
      return;
    }
    for (Vertex x = 0; x < n; ++x) {
      if (used[x]) continue;
      used[x] = 1;
      cur[depth] = x;
      self(self, depth + 1);
      used[x] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Placement> sample_placements(const SimpleGraph& g, const PatternMultigraph& h,
                                         std::size_t count, std::uint64_t seed) {
  const int n = g.order(), m = h.order();
  std::vector<Placement> out;
  if (m > n || count == 0) return out;
  // Number of injective maps, saturating.
  double total = 1;
  for (int i = 0; i < m; ++i) total *= (n - i);
  std::size_t want = static_cast<std::size_t>(std::min<double>(static_cast<double>(count), total));
  Rng rng(seed);
  std::set<std::vector<Vertex>> seen;
  std::vector<Vertex> pool(static_cast<std::size_t>(n));
  while (out.size() < want) {
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < m; ++i) {
      std::size_t j = i + rng.below(static_cast<std::uint64_t>(n - i));
      std::swap(pool[i], pool[j]);
    }
    std::vector<Vertex> pick(pool.begin(), pool.begin() + m);
    if (seen.insert(pick).second) out.push_back(Placement{std::move(pick)});
  }
  return out;
}

namespace {

LinkedReport summarize(std::vector<PlacementOutcome> outcomes) {
  LinkedReport r;
  bool all_linked = true;
  for (const auto& o : outcomes) {
    r.total_nodes += o.result.nodes_explored;
    if (o.result.status == LinkStatus::NotLinked) r.not_linked++;
    if (o.result.status == LinkStatus::Exhausted) r.exhausted++;
    if (!o.result.linked()) all_linked = false;
  }
  if (r.not_linked > 0) {
    r.verdict = Verdict::NotLinked;
  } else {
    r.verdict = all_linked ? Verdict::Linked : Verdict::Inconclusive;
  }
  r.outcomes = std::move(outcomes);
  return r;
}

std::vector<Placement> placements_for(const SimpleGraph& g, const PatternMultigraph& h,
                                      const ScanOptions& options) {
  if (h.order() > g.order()) {
    throw Error(ErrorCode::InvalidPlacement, "pattern has more vertices than the host");
  }
  if (options.mode == ScanOptions::Mode::All) return quotient_placements(g, h);
  return sample_placements(g, h, options.count, options.seed);
}

}  // namespace

LinkedReport scan_placements(const SimpleGraph& g, const PatternMultigraph& h,
                             const std::vector<Placement>& placements, std::uint64_t budget,
                             int jobs) {
  if (budget == 0) throw Error(ErrorCode::BudgetNonPositive, "search budget must be positive");
  std::vector<PlacementOutcome> outcomes(placements.size());
  const long count = static_cast<long>(placements.size());
  if (jobs == 1) {
    for (long i = 0; i < count; ++i) {
      outcomes[i] = {placements[i], find_subdivision(g, h, placements[i], budget)};
    }
    return summarize(std::move(outcomes));
  }
  // Each worker writes only its own slots; the first exception wins.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(resolve_jobs(jobs))
  for (long i = 0; i < count; ++i) {
    try {
      outcomes[i] = {placements[i], find_subdivision(g, h, placements[i], budget)};
    } catch (...) {
#pragma omp critical(hlink_scan_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return summarize(std::move(outcomes));
}

LinkedReport is_h_linked(const SimpleGraph& g, const PatternMultigraph& h,
                         const ScanOptions& options) {
  return scan_placements(g, h, placements_for(g, h, options), options.budget, options.jobs);
}

LinkedReport is_h_linked_serial(const SimpleGraph& g, const PatternMultigraph& h,
                                const ScanOptions& options) {
  return scan_placements(g, h, placements_for(g, h, options), options.budget, 1);
}

}  // namespace hlink
