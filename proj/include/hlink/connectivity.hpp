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

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hlink/graph.hpp"

namespace hlink {

/// Either a full path system or a separating vertex set.
struct CutOrPaths {
  std::vector<PathSeq> paths;
  std::optional<std::vector<Vertex>> cut;

  bool found_paths() const noexcept { return !cut.has_value(); }
};

/// Unit vertex-capacity max-flow on the split digraph of a host graph.
///
/// Scratch buffers are reused across calls, so one instance per thread.
class VertexFlow {
 public:
  explicit VertexFlow(const SimpleGraph& g);

  /// Number of internally disjoint s–t paths (capped at `limit`) using only
  /// vertices not flagged in `blocked`; s and t are never blocked. A direct
  /// s–t edge counts as one path.
  int count(Vertex s, Vertex t, int limit, const VertexMask* blocked = nullptr);

  /// Same flow, but with a set of sinks: paths from s end at distinct
  /// vertices of `sinks` (each sink absorbs one path).
  int count_to_set(Vertex s, const VertexMask& sinks, int limit,
                   const VertexMask* blocked = nullptr);

  /// Paths of the last flow computed, each starting at s.
  std::vector<PathSeq> paths() const;
  /// Vertices on the source side boundary of the residual graph after the
  /// last flow: a minimum vertex cut when the flow was below its limit and
  /// the terminals are non-adjacent.
  std::vector<Vertex> min_cut() const;

 private:
  struct Arc {
    int to;
    int cap;
  };
  void build(Vertex s, const VertexMask* sinks, Vertex t, const VertexMask* blocked);
  int augment(int limit);
  void add_arc(int from, int to, int cap);

  const SimpleGraph* g_;
  int source_ = 0;
  int sink_ = 0;
  Vertex s_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<int> parent_arc_;
  std::vector<int> queue_;
};

/// κ(G), with κ(K_n) = n-1 and κ = 0 for disconnected graphs.
int vertex_connectivity(const SimpleGraph& g);
/// Whether κ(G) >= k, exiting early on the first cheap witness.
bool is_k_connected(const SimpleGraph& g, int k);

/// k internally disjoint s–t paths, or a vertex cut of size < k (s, t
/// non-adjacent). Vertices in `forbidden` are unusable. Throws
/// AdjacentTerminalsNoCut when s, t are adjacent and fewer paths exist.
CutOrPaths disjoint_paths(const SimpleGraph& g, Vertex s, Vertex t, int k,
                          const VertexMask* forbidden = nullptr);

/// k paths from s to distinct vertices of `targets`, disjoint except at s,
/// avoiding `avoid`; each path stops at its first target vertex. Otherwise a
/// separating set of size < k in G - avoid. Throws InsufficientTargets when
/// k exceeds the number of targets.
CutOrPaths fan(const SimpleGraph& g, Vertex s, const std::vector<Vertex>& targets,
               int k, const std::vector<Vertex>& avoid = {});

struct Duplication {
  SimpleGraph graph;
  /// copies[v] lists the new ids standing for original v.
  std::vector<std::vector<Vertex>> copies;
  /// origin[x] is the original vertex of new vertex x.
  std::vector<Vertex> origin;
};

/// Replaces each v in `counts` by counts[v] pairwise non-adjacent copies;
/// copies of u and v are adjacent iff uv is an edge. New ids follow the
/// original order, copies consecutive.
Duplication duplicate_vertices(const SimpleGraph& g, const std::map<Vertex, int>& counts);

bool is_connected(const SimpleGraph& g, const VertexMask* removed = nullptr);
/// Component id per vertex (-1 for removed vertices); returns the count.
int components(const SimpleGraph& g, std::vector<int>& label,
               const VertexMask* removed = nullptr);

}  // namespace hlink
