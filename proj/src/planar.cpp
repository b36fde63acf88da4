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

#include "hlink/planar.hpp"

#include <algorithm>
#include <set>

#include "hlink/connectivity.hpp"
#include "hlink/generators.hpp"

namespace hlink {

namespace {

using Rotation = std::vector<std::vector<Vertex>>;

int index_in(const std::vector<Vertex>& rot, Vertex x) {
  auto it = std::find(rot.begin(), rot.end(), x);
  return it == rot.end() ? -1 : static_cast<int>(it - rot.begin());
}

void insert_after(std::vector<Vertex>& rot, Vertex after, Vertex x) {
  rot.insert(rot.begin() + index_in(rot, after) + 1, x);
}

void erase_value(std::vector<Vertex>& rot, Vertex x) {
  rot.erase(rot.begin() + index_in(rot, x));
}

bool same_cycle(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (a.size() != b.size()) return false;
  const std::size_t L = a.size();
  if (L == 0) return true;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t s = 0; s < L; ++s) {
      bool ok = true;
      for (std::size_t i = 0; i < L && ok; ++i) {
        std::size_t j = dir == 0 ? (s + i) % L : (s + L - i) % L;
        ok = a[i] == b[j];
      }
      if (ok) return true;
    }
  }
  return false;
}

SimpleGraph graph_of(const Rotation& rot) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < static_cast<Vertex>(rot.size()); ++v)
    for (Vertex w : rot[v])
      if (v < w) e.push_back({v, w});
  return SimpleGraph(static_cast<int>(rot.size()), e);
}

}  // namespace

std::vector<std::vector<Vertex>> trace_faces(const Rotation& rotation) {
  const int n = static_cast<int>(rotation.size());
  // pos[v * n + u]: index of u in rotation[v].
  std::vector<int> pos(static_cast<std::size_t>(n) * n, -1);
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i) {
      Vertex u = rotation[v][i];
      if (u < 0 || u >= n || u == v) throw Error(ErrorCode::InvalidGraph, "rotation entry out of range");
      auto& slot = pos[static_cast<std::size_t>(v) * n + u];
      if (slot != -1) throw Error(ErrorCode::InvalidGraph, "neighbor repeated in a rotation");
      slot = i;
    }
  }
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : rotation[v])
      if (pos[static_cast<std::size_t>(u) * n + v] == -1) {
        throw Error(ErrorCode::InvalidGraph, "rotation is not symmetric");
      }

  std::vector<std::vector<char>> seen(n);
  for (Vertex v = 0; v < n; ++v) seen[v].assign(rotation[v].size(), 0);
  std::vector<std::vector<Vertex>> faces;
  for (Vertex s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < rotation[s].size(); ++i) {
      if (seen[s][i]) continue;
      std::vector<Vertex> face;
      Vertex u = s;
      int k = static_cast<int>(i);
      while (!seen[u][k]) {
        seen[u][k] = 1;
        face.push_back(u);
        Vertex v = rotation[u][k];
        int back = pos[static_cast<std::size_t>(v) * n + u];
        k = (back + 1) % static_cast<int>(rotation[v].size());
        u = v;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

std::string embedding_defect(const SimpleGraph& g, const RotationEmbedding& e,
                             const VertexMask* ignored) {
  const int n = g.order();
  if (static_cast<int>(e.rotation.size()) != n) return "rotation table size differs from |V|";
  int vertices = 0;
  for (Vertex v = 0; v < n; ++v) {
    bool skip = ignored && (*ignored)[v];
    if (skip) {
      if (g.degree(v) != 0 || !e.rotation[v].empty()) return "ignored vertex is not isolated";
      continue;
    }
    ++vertices;
    std::vector<Vertex> sorted = e.rotation[v];
    std::sort(sorted.begin(), sorted.end());
    auto nb = g.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) {
      return "rotation at " + std::to_string(v) + " is not its neighbor set";
    }
  }
  if (vertices == 0) return "empty graph";
  if (!is_connected(g, ignored)) return "graph is not connected";
  std::vector<std::vector<Vertex>> faces;
  try {
    faces = trace_faces(e.rotation);
  } catch (const Error& err) {
    return err.what();
  }
  const long edges = static_cast<long>(g.size());
  const long face_count = edges == 0 ? 1 : static_cast<long>(faces.size());
  if (vertices - edges + face_count != 2) return "Euler check failed (genus > 0)";
  if (edges == 0) {
    if (e.outer.size() != 1 || (ignored && (*ignored)[e.outer[0]])) return "outer walk is not a face";
    return {};
  }
  for (const auto& f : faces)
    if (same_cycle(f, e.outer)) return {};
  return "outer walk is not a face";
}

bool in_cyclic_order(const std::vector<Vertex>& walk, const std::vector<Vertex>& b) {
  if (b.empty()) return true;
  const std::size_t L = walk.size();
  for (int dir = 0; dir < 2; ++dir) {
    auto at = [&](std::size_t i) { return dir == 0 ? walk[i % L] : walk[(L - i % L) % L]; };
    for (std::size_t s = 0; s < L; ++s) {
      if (at(s) != b[0]) continue;
      std::size_t k = 1;
      for (std::size_t t = 1; t < L && k < b.size(); ++t)
        if (at(s + t) == b[k]) ++k;
      if (k == b.size()) return true;
    }
  }
  return false;
}

bool for_each_plane_rotation(
    const SimpleGraph& g,
    const std::function<bool(const Rotation&, const std::vector<std::vector<Vertex>>&)>& visit,
    const VertexMask* ignored) {
  const int n = g.order();
  int vertices = 0;
  for (Vertex v = 0; v < n; ++v) vertices += !(ignored && (*ignored)[v]);
  const long edges = static_cast<long>(g.size());
  if (vertices == 0 || !is_connected(g, ignored)) return false;
  if (vertices >= 3 && edges > 3L * vertices - 6) return false;

  Rotation rot(n);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    rot[v].assign(nb.begin(), nb.end());
  }
  if (edges == 0) return visit(rot, {});
  const long target_faces = 2 - vertices + edges;
  // Odometer over next_permutation of each rotation's tail.
  std::vector<Vertex> order;
  for (Vertex v = 0; v < n; ++v)
    if (rot[v].size() >= 3) order.push_back(v);
  while (true) {
    auto faces = trace_faces(rot);
    if (static_cast<long>(faces.size()) == target_faces && visit(rot, faces)) return true;
    std::size_t i = 0;
    for (; i < order.size(); ++i) {
      auto& r = rot[order[i]];
      if (std::next_permutation(r.begin() + 1, r.end())) break;
    }
    if (i == order.size()) return false;
  }
}

std::vector<Vertex> neighborhood(const SimpleGraph& g, const std::vector<Vertex>& S) {
  VertexMask in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : S) in[v] = 1;
  std::set<Vertex> out;
  for (Vertex v : S)
    for (Vertex w : g.neighbors(v))
      if (!in[w]) out.insert(w);
  return {out.begin(), out.end()};
}

SimpleGraph pocket_reduction(const SimpleGraph& g, const std::vector<std::vector<Vertex>>& A,
                             VertexMask* deleted) {
  VertexMask gone(static_cast<std::size_t>(g.order()), 0);
  for (const auto& a : A)
    for (Vertex v : a) gone[v] = 1;
  std::set<Edge> e;
  for (auto [u, v] : g.edges())
    if (!gone[u] && !gone[v]) e.insert({u, v});
  for (const auto& a : A) {
    auto nb = neighborhood(g, a);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!gone[nb[i]] && !gone[nb[j]]) e.insert({nb[i], nb[j]});
  }
  if (deleted) *deleted = gone;
  std::vector<Edge> list(e.begin(), e.end());
  return SimpleGraph(g.order(), list);
}

std::string three_planar_defect(const SimpleGraph& g, const ThreePlanarCertificate& cert) {
  const int n = g.order();
  auto malformed = [](const std::string& why) { return Error(ErrorCode::MalformedCertificate, why); };
  if (static_cast<int>(cert.embedding.rotation.size()) != n) throw malformed("rotation table size");
  for (const auto& r : cert.embedding.rotation)
    for (Vertex v : r)
      if (!g.contains(v)) throw malformed("rotation id out of range");
  for (Vertex v : cert.embedding.outer)
    if (!g.contains(v)) throw malformed("outer walk id out of range");
  std::set<Vertex> terms;
  for (Vertex b : cert.terminals) {
    if (!g.contains(b)) throw malformed("terminal out of range");
    if (!terms.insert(b).second) throw malformed("terminal repeated");
  }
  for (const auto& a : cert.A) {
    if (a.empty()) throw malformed("empty pocket");
    std::set<Vertex> seen;
    for (Vertex v : a) {
      if (!g.contains(v)) throw malformed("pocket vertex out of range");
      if (!seen.insert(v).second) throw malformed("pocket vertex repeated");
    }
  }

  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < cert.A.size(); ++i) {
    for (Vertex v : cert.A[i]) {
      if (owner[v] != -1) return "pockets overlap";
      owner[v] = static_cast<int>(i);
    }
  }
  std::vector<std::vector<Vertex>> attach(cert.A.size());
  for (std::size_t i = 0; i < cert.A.size(); ++i) {
    attach[i] = neighborhood(g, cert.A[i]);
    for (Vertex w : attach[i])
      if (owner[w] != -1) return "N(A_" + std::to_string(i + 1) + ") meets another pocket";
    if (attach[i].size() > 3) return "|N(A_" + std::to_string(i + 1) + ")| > 3";
  }
  for (Vertex b : cert.terminals)
    if (owner[b] != -1) return "terminal inside a pocket";

  VertexMask deleted;
  auto p = pocket_reduction(g, cert.A, &deleted);
  if (auto why = embedding_defect(p, cert.embedding, &deleted); !why.empty()) return why;
  if (!in_cyclic_order(cert.embedding.outer, cert.terminals)) return "terminals not in order on the outer face";

  auto faces = trace_faces(cert.embedding.rotation);
  for (std::size_t i = 0; i < attach.size(); ++i) {
    if (attach[i].size() != 3) continue;
    bool facial = false;
    for (const auto& f : faces) {
      if (f.size() != 3) continue;
      std::vector<Vertex> s = f;
      std::sort(s.begin(), s.end());
      facial = facial || s == attach[i];
    }
    if (!facial) return "N(A_" + std::to_string(i + 1) + ") is not a facial triangle";
  }
  return {};
}

DischargeWitness discharge_witness(const SimpleGraph& h, const RotationEmbedding& emb, Vertex x,
                                   Vertex y) {
  if (!is_k_connected(h, 3)) throw Error(ErrorCode::NotThreeConnected, "H is not 3-connected");
  if (auto why = embedding_defect(h, emb); !why.empty()) throw Error(ErrorCode::NotPlanar, why);
  const auto& z = emb.outer;
  VertexMask on_z(static_cast<std::size_t>(h.order()), 0);
  for (Vertex v : z) {
    if (on_z[v]) throw Error(ErrorCode::NotPlanar, "outer walk is not a cycle");
    on_z[v] = 1;
  }
  if (x == y || !h.contains(x) || !h.contains(y) || !on_z[x] || !on_z[y]) {
    throw Error(ErrorCode::PreconditionViolated, "x, y must be distinct outer-cycle vertices");
  }
  for (Vertex v = 0; v < h.order(); ++v)
    if (!on_z[v] && h.degree(v) <= 6) return {DischargeWitness::Kind::InteriorVertex, v, -1, h.degree(v)};
  for (std::size_t i = 0; i < z.size(); ++i) {
    Vertex u = z[i], v = z[(i + 1) % z.size()];
    if (u == x || u == y || v == x || v == y) continue;
    int sum = h.degree(u) + h.degree(v);
    if (sum <= 7) return {DischargeWitness::Kind::OuterEdge, u, v, sum};
  }
  throw Error(ErrorCode::WitnessNotFound, "no low-degree interior vertex or outer edge");
}

PlaneGraph random_plane_graph(int n, std::uint64_t seed, double delete_fraction) {
  if (n < 4) throw Error(ErrorCode::ParameterError, "random_plane_graph needs n >= 4");
  Rng rng(seed);
  Rotation rot(n);
  rot[0] = {1, 2};
  rot[1] = {0, 2};
  rot[2] = {0, 1};
  struct Tri {
    Vertex a, b, c;
  };
  std::vector<Tri> tris{{0, 1, 2}, {0, 2, 1}};
  for (Vertex w = 3; w < n; ++w) {
    std::size_t pick = rng.below(tris.size());
    Tri t = tris[pick];
    insert_after(rot[t.b], t.a, w);
    insert_after(rot[t.c], t.b, w);
    insert_after(rot[t.a], t.c, w);
    rot[w] = {t.a, t.c, t.b};
    tris[pick] = {t.a, t.b, w};
    tris.push_back({t.b, t.c, w});
    tris.push_back({t.c, t.a, w});
  }

  auto succ = [&](Vertex v, Vertex u) {
    const auto& r = rot[v];
    return r[(index_in(r, u) + 1) % r.size()];
  };
  for (int round = 0; round < 3 * n; ++round) {
    Vertex a = static_cast<Vertex>(rng.below(n));
    if (rot[a].size() <= 3) continue;
    Vertex b = rot[a][rng.below(rot[a].size())];
    if (rot[b].size() <= 3) continue;
    Vertex c = succ(b, a), d = succ(a, b);
    if (c == d || index_in(rot[c], d) != -1) continue;
    erase_value(rot[a], b);
    erase_value(rot[b], a);
    insert_after(rot[c], b, d);
    insert_after(rot[d], a, c);
  }

  auto g = graph_of(rot);
  auto edges = g.edges();
  rng.shuffle(edges);
  std::size_t budget = static_cast<std::size_t>(delete_fraction * static_cast<double>(edges.size()));
  for (auto [u, v] : edges) {
    if (budget == 0) break;
    if (rot[u].size() <= 3 || rot[v].size() <= 3) continue;
    auto smaller = g.without_edge(u, v);
    if (!is_k_connected(smaller, 3)) continue;
    erase_value(rot[u], v);
    erase_value(rot[v], u);
    g = std::move(smaller);
    --budget;
  }
  auto faces = trace_faces(rot);
  PlaneGraph out{std::move(g), {rot, faces[rng.below(faces.size())]}};
  return out;
}

}  // namespace hlink
