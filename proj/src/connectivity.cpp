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

#include "hlink/connectivity.hpp"

#include <algorithm>

namespace hlink {

// Node layout: v_in = 2v, v_out = 2v + 1, super sink = 2n.
VertexFlow::VertexFlow(const SimpleGraph& g) : g_(&g) {}

void VertexFlow::add_arc(int from, int to, int cap) {
  out_[from].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, cap});
  out_[to].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, 0});
}

void VertexFlow::build(Vertex s, const VertexMask* sinks, Vertex t,
                       const VertexMask* blocked) {
  const int n = g_->order();
  const int inf = n + 2;
  const int super = 2 * n;
  s_ = s;
  arcs_.clear();
  out_.assign(static_cast<std::size_t>(2 * n + 1), {});
  auto usable = [&](Vertex v) {
    return v == s || v == t || !blocked || !(*blocked)[v];
  };
  auto is_sink = [&](Vertex v) { return sinks && (*sinks)[v] && v != s; };
  for (Vertex v = 0; v < n; ++v) {
    if (!usable(v) || v == s) continue;
    if (is_sink(v)) {
      add_arc(2 * v, super, 1);
    } else if (v != t) {
      add_arc(2 * v, 2 * v + 1, 1);
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    if (!usable(u) || u == t || is_sink(u)) continue;
    for (Vertex w : g_->neighbors(u)) {
      if (!usable(w) || w == s) continue;
      int cap = (u == s && w == t) ? 1 : inf;
      add_arc(2 * u + 1, 2 * w, cap);
    }
  }
  source_ = 2 * s + 1;
  sink_ = sinks ? super : 2 * t;
}

int VertexFlow::augment(int limit) {
  int flow = 0;
  const std::size_t nodes = out_.size();
  while (flow < limit) {
    parent_arc_.assign(nodes, -1);
    queue_.clear();
    queue_.push_back(source_);
    parent_arc_[source_] = -2;
    bool reached = false;
    for (std::size_t head = 0; head < queue_.size() && !reached; ++head) {
      int x = queue_[head];
      for (int a : out_[x]) {
        int y = arcs_[a].to;
        if (arcs_[a].cap <= 0 || parent_arc_[y] != -1) continue;
        parent_arc_[y] = a;
        if (y == sink_) {
          reached = true;
          break;
        }
        queue_.push_back(y);
      }
    }
    if (!reached) break;
    for (int y = sink_; y != source_;) {
      int a = parent_arc_[y];
      arcs_[a].cap -= 1;
      arcs_[a ^ 1].cap += 1;
      y = arcs_[a ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

int VertexFlow::count(Vertex s, Vertex t, int limit, const VertexMask* blocked) {
  build(s, nullptr, t, blocked);
  return augment(limit);
}

int VertexFlow::count_to_set(Vertex s, const VertexMask& sinks, int limit,
                             const VertexMask* blocked) {
  build(s, &sinks, -1, blocked);
  return augment(limit);
}

std::vector<PathSeq> VertexFlow::paths() const {
  // Forward arcs have even index; flow on them shows up as residual on the
  // paired reverse arc.
  auto flow_on = [&](int a) { return (a % 2 == 0) && arcs_[a ^ 1].cap > 0; };
  std::vector<PathSeq> out;
  const int n = g_->order();
  for (int a : out_[source_]) {
    if (!flow_on(a)) continue;
    PathSeq p;
    p.vertices.push_back(s_);
    int node = arcs_[a].to;
    while (true) {
      p.vertices.push_back(node / 2);
      if (node == sink_) break;
      int next = -1;
      for (int b : out_[node]) {
        if (flow_on(b)) {
          next = b;
          break;
        }
      }
      if (next < 0) break;
      int to = arcs_[next].to;
      if (to == 2 * n) break;  // sink vertex absorbed into the super sink
      if (to == node + 1) {    // in -> out of the same vertex
        for (int b : out_[to]) {
          if (flow_on(b)) {
            next = b;
            break;
          }
        }
        to = arcs_[next].to;
      }
      node = to;
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Vertex> VertexFlow::min_cut() const {
  std::vector<char> reach(out_.size(), 0);
  std::vector<int> stack{source_};
  reach[source_] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int a : out_[x]) {
      int y = arcs_[a].to;
      if (arcs_[a].cap > 0 && !reach[y]) {
        reach[y] = 1;
        stack.push_back(y);
      }
    }
  }
  const int n = g_->order();
  std::vector<Vertex> cut;
  for (Vertex v = 0; v < n; ++v) {
    if (!reach[2 * v]) continue;
    bool saturated = false;
    for (int a : out_[2 * v]) {
      if (a % 2 == 0 && arcs_[a].cap == 0 && !reach[arcs_[a].to]) saturated = true;
    }
    if (saturated) cut.push_back(v);
  }
  return cut;
}

bool is_connected(const SimpleGraph& g, const VertexMask* removed) {
  std::vector<int> label;
  return components(g, label, removed) <= 1;
}

int components(const SimpleGraph& g, std::vector<int>& label, const VertexMask* removed) {
  const int n = g.order();
  label.assign(static_cast<std::size_t>(n), -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex r = 0; r < n; ++r) {
    if (label[r] >= 0 || (removed && (*removed)[r])) continue;
    label[r] = count;
    stack.push_back(r);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (label[y] >= 0 || (removed && (*removed)[y])) continue;
        label[y] = count;
        stack.push_back(y);
      }
    }
    ++count;
  }
  return count;
}

int vertex_connectivity(const SimpleGraph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (g.is_complete()) return n - 1;
  if (!is_connected(g)) return 0;
  int best = n - 1;
  for (Vertex v = 0; v < n; ++v) best = std::min(best, g.degree(v));
  VertexFlow flow(g);
  // Some minimum cut misses one of the first best+1 vertices; that vertex
  // and a later one on the far side realize it.
  for (Vertex i = 0; i <= best && i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      best = std::min(best, flow.count(i, j, best));
    }
  }
  return best;
}

bool is_k_connected(const SimpleGraph& g, int k) {
  const int n = g.order();
  if (k <= 0) return true;
  if (n < k + 1) return false;
  if (g.is_complete()) return true;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) < k) return false;
  VertexFlow flow(g);
  for (Vertex i = 0; i <= k && i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j) && flow.count(i, j, k) < k) return false;
    }
  }
  return true;
}

CutOrPaths disjoint_paths(const SimpleGraph& g, Vertex s, Vertex t, int k,
                          const VertexMask* forbidden) {
  if (s == t || !g.contains(s) || !g.contains(t)) {
    throw Error(ErrorCode::PreconditionViolated, "disjoint_paths needs distinct host vertices");
  }
  VertexFlow flow(g);
  CutOrPaths out;
  if (flow.count(s, t, k, forbidden) >= k) {
    out.paths = flow.paths();
    return out;
  }
  if (g.adjacent(s, t)) {
    throw Error(ErrorCode::AdjacentTerminalsNoCut,
                "fewer than " + std::to_string(k) + " paths between adjacent terminals");
  }
  out.cut = flow.min_cut();
  return out;
}

CutOrPaths fan(const SimpleGraph& g, Vertex s, const std::vector<Vertex>& targets, int k,
               const std::vector<Vertex>& avoid) {
  const int n = g.order();
  if (static_cast<std::size_t>(k) > targets.size()) {
    throw Error(ErrorCode::InsufficientTargets,
                std::to_string(k) + " paths requested, " + std::to_string(targets.size()) +
                    " targets");
  }
  VertexMask blocked(static_cast<std::size_t>(n), 0), sinks(static_cast<std::size_t>(n), 0);
  for (Vertex v : avoid) blocked[v] = 1;
  for (Vertex v : targets) sinks[v] = 1;
  if (blocked[s] || sinks[s]) {
    throw Error(ErrorCode::PreconditionViolated, "fan source lies in targets or avoid set");
  }
  for (Vertex v = 0; v < n; ++v)
    if (blocked[v]) sinks[v] = 0;
  VertexFlow flow(g);
  CutOrPaths out;
  if (flow.count_to_set(s, sinks, k, &blocked) >= k) {
    out.paths = flow.paths();
    return out;
  }
  out.cut = flow.min_cut();
  return out;
}

Duplication duplicate_vertices(const SimpleGraph& g, const std::map<Vertex, int>& counts) {
  const int n = g.order();
  Duplication d;
  d.copies.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    int c = 1;
    if (auto it = counts.find(v); it != counts.end()) c = it->second;
    if (c < 1) throw Error(ErrorCode::ParameterError, "copy count must be >= 1");
    for (int i = 0; i < c; ++i) {
      d.copies[v].push_back(static_cast<Vertex>(d.origin.size()));
      d.origin.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    for (Vertex a : d.copies[u])
      for (Vertex b : d.copies[v]) edges.emplace_back(std::min(a, b), std::max(a, b));
  d.graph = SimpleGraph(static_cast<int>(d.origin.size()), edges);
  return d;
}

}  // namespace hlink
