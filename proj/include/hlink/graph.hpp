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

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hlink/error.hpp"

namespace hlink {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Per-vertex boolean flags; the index is the vertex id.
using VertexMask = std::vector<char>;

/// Undirected, loopless, simple host graph on vertices 0..n-1.
///
/// Immutable after construction. Neighbor lists are sorted ascending, and
/// adjacency queries are O(1) through a dense matrix (host graphs here are
/// desk-sized).
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  /// Throws InvalidGraph on loops or duplicate edges, RangeError on ids
  /// outside 0..n-1.
  SimpleGraph(int n, std::span<const Edge> edges);
  SimpleGraph(int n, std::initializer_list<Edge> edges)
      : SimpleGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }
  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  bool is_complete() const noexcept {
    return 2 * m_ == static_cast<std::size_t>(n_) * (n_ - 1);
  }

  SimpleGraph with_edge(Vertex u, Vertex v) const;
  SimpleGraph without_edge(Vertex u, Vertex v) const;
  /// Graph on the vertices not flagged in `removed`, relabeled in ascending
  /// order. `old_ids` (if given) receives the original id of every new vertex.
  SimpleGraph without_vertices(const VertexMask& removed,
                               std::vector<Vertex>* old_ids = nullptr) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> matrix_;
};

/// Named host graphs used throughout tests, campaigns, and the CLI.
namespace graphs {
SimpleGraph complete(int n);
SimpleGraph cycle(int n);
SimpleGraph path(int n);
SimpleGraph star(int leaves);  // center is vertex 0
SimpleGraph petersen();
/// Rim 0..rim-1 as a cycle, hub is vertex `rim`.
SimpleGraph wheel(int rim);
SimpleGraph circulant(int n, std::span<const int> offsets);
SimpleGraph complete_bipartite(int a, int b);
}  // namespace graphs

struct PatternEdge {
  int a = 0;
  int b = 0;
  friend bool operator==(const PatternEdge&, const PatternEdge&) = default;
};

/// A permutation of pattern vertex ids: perm[v] is the image of v.
using Permutation = std::vector<int>;

/// The pattern multigraph H: parallel edges allowed, loops forbidden.
///
/// Edge instances are indexed; routes in a Subdivision are parallel to
/// edges(). Named constructors also record a list of automorphisms used to
/// quotient placement scans; patterns built from raw edges only carry the
/// identity.
class PatternMultigraph {
 public:
  PatternMultigraph() = default;
  PatternMultigraph(int m, std::vector<PatternEdge> edges,
                    std::string name = "custom");

  /// v1=0, v2=1, v3=2; k1 edges v1v2, then k2 edges v2v3, then k3 edges v3v1.
  static PatternMultigraph fat_triangle(int k1, int k2, int k3);
  /// Vertex ids: 0=u2 (degree 3), 1=u1, 2=u3, 3=u4. Edges in order:
  /// u2u1, u1u3, u3u2, u2u4.
  static PatternMultigraph kite();
  static PatternMultigraph bond(int k);
  static PatternMultigraph matching(int k);
  static PatternMultigraph cycle(int k);
  static PatternMultigraph path(int m);

  int order() const noexcept { return m_; }
  std::span<const PatternEdge> edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::string& name() const noexcept { return name_; }
  std::span<const Permutation> automorphisms() const noexcept {
    return automorphisms_;
  }
  int degree(int v) const;
  int multiplicity(int a, int b) const;
  bool has_isolated_vertex() const;

 private:
  int m_ = 0;
  std::vector<PatternEdge> edges_;
  std::string name_;
  std::vector<Permutation> automorphisms_;
};

/// Injective map from pattern vertices to host vertices.
struct Placement {
  std::vector<Vertex> images;

  Vertex operator[](int v) const { return images[v]; }
  std::size_t size() const noexcept { return images.size(); }
  /// Throws InvalidPlacement unless injective, in range, and of arity |V(H)|.
  void check(const PatternMultigraph& h, const SimpleGraph& g) const;
  friend bool operator==(const Placement&, const Placement&) = default;
  friend auto operator<=>(const Placement&, const Placement&) = default;
};

/// A sequence of host vertices. May be empty (optional subpaths of a
/// cycle); routes and witness paths are non-empty.
struct PathSeq {
  std::vector<Vertex> vertices;

  bool empty() const noexcept { return vertices.empty(); }
  std::size_t size() const noexcept { return vertices.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool contains(Vertex v) const;
  /// end(P): the first and last vertex (one vertex for trivial paths).
  std::vector<Vertex> ends() const;
  /// int(P) = V(P) \ end(P).
  std::vector<Vertex> interior() const;
  PathSeq reversed() const;
  /// Distinct vertices, consecutive ones adjacent, at least one vertex.
  bool is_path_in(const SimpleGraph& g) const;

  friend bool operator==(const PathSeq&, const PathSeq&) = default;
};

/// Concatenates paths that share their junction vertex (a.back()==b.front()).
PathSeq join(std::initializer_list<PathSeq> parts);

/// A cycle with an orientation: the stored order.
class OrientedCycle {
 public:
  OrientedCycle() = default;
  /// Throws InvalidPath unless >= 3 distinct vertices forming a cycle in g.
  OrientedCycle(const SimpleGraph& g, std::vector<Vertex> vertices);
  /// No adjacency check; still requires >= 3 distinct vertices.
  static OrientedCycle unchecked(std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool contains(Vertex v) const;
  /// Index of v in the stored order; throws VertexNotOnCycle.
  std::size_t position(Vertex v) const;
  Vertex next(Vertex v) const;
  Vertex prev(Vertex v) const;
  OrientedCycle reversed() const;
  bool is_cycle_in(const SimpleGraph& g) const;

  friend bool operator==(const OrientedCycle&, const OrientedCycle&) = default;

 private:
  std::vector<Vertex> vertices_;
};

enum class Bound { Open, Closed };

/// C[u,v] and its open/half-open variants, following C's orientation.
/// Throws VertexNotOnCycle; u == v is a PreconditionViolated error.
PathSeq interval(const OrientedCycle& c, Vertex u, Vertex v,
                 Bound at_u = Bound::Closed, Bound at_v = Bound::Closed);

/// Placement plus one route per pattern edge instance (parallel to
/// PatternMultigraph::edges()).
struct Subdivision {
  Placement placement;
  std::vector<PathSeq> routes;
};

enum class Violation {
  None,
  InvalidPlacement,
  NotAPath,
  WrongEndpoints,
  InteriorHitsPlacedVertex,
  SharedInterior,
  RepeatedEdge,
};

const char* to_string(Violation v) noexcept;

struct SubdivisionCheck {
  Violation reason = Violation::None;
  std::size_t route = 0;  // offending route index (first one found)
  std::string detail;

  bool valid() const noexcept { return reason == Violation::None; }
  explicit operator bool() const noexcept { return valid(); }
};

/// Checks every Subdivision invariant: routes are host paths with endpoints
/// φ(u), φ(v) (either direction), interiors avoid placed vertices, interiors
/// are pairwise disjoint, and no host edge carries two single-edge routes.
/// Throws ArityMismatch when the route count differs from |E(H)|.
SubdivisionCheck validate_subdivision(const SimpleGraph& g,
                                      const PatternMultigraph& h,
                                      const Subdivision& s);

}  // namespace hlink
