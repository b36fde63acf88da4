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
#include <functional>
#include <string>
#include <vector>

#include "hlink/graph.hpp"

namespace hlink {

/// Combinatorial embedding: rotation[v] is the cyclic order of v's
/// neighbors. Faces are traced dart by dart, (u, v) -> (v, w) with w the
/// successor of u in rotation[v]. `outer` is the boundary walk of the outer
/// face as a vertex sequence; it may repeat vertices when the graph is not
/// 2-connected.
struct RotationEmbedding {
  std::vector<std::vector<Vertex>> rotation;
  std::vector<Vertex> outer;
};

/// Face walks of a rotation system, one vertex sequence (dart tails) per
/// face. Vertices with an empty rotation contribute nothing. Throws
/// InvalidGraph if the rotation is not symmetric (u in rotation[v] without v
/// in rotation[u]) or lists a neighbor twice.
std::vector<std::vector<Vertex>> trace_faces(const std::vector<std::vector<Vertex>>& rotation);

/// Empty if `e` is a plane embedding of g: each rotation is a permutation of
/// the neighbor set, g is connected, V - E + F = 2, and `outer` is one of
/// the traced faces up to rotation and reversal. Otherwise a short reason.
/// `ignored` vertices (deleted pockets) must be isolated and have empty
/// rotations; they are left out of the count.
std::string embedding_defect(const SimpleGraph& g, const RotationEmbedding& e,
                             const VertexMask* ignored = nullptr);
inline bool is_plane_embedding(const SimpleGraph& g, const RotationEmbedding& e) {
  return embedding_defect(g, e).empty();
}

/// Whether b occurs along the cyclic walk in this cyclic order, read in
/// either direction. Repeated walk vertices may supply any occurrence.
bool in_cyclic_order(const std::vector<Vertex>& walk, const std::vector<Vertex>& b);

/// Calls `visit(rotation, faces)` for every genus-0 rotation system of a
/// connected g, with the first neighbor of each rotation fixed. Stops early
/// when visit returns true; the return value says whether it did. Vertices
/// flagged in `ignored` get empty rotations. Meant for n <= 8.
bool for_each_plane_rotation(
    const SimpleGraph& g,
    const std::function<bool(const std::vector<std::vector<Vertex>>&,
                             const std::vector<std::vector<Vertex>>&)>& visit,
    const VertexMask* ignored = nullptr);

struct ThreePlanarCertificate {
  std::vector<std::vector<Vertex>> A;
  std::vector<Vertex> terminals;  // b_1..b_n
  /// Embedding of p(G, A) on the original vertex ids; pocket vertices have
  /// empty rotations.
  RotationEmbedding embedding;
};

/// p(G, A): each A_i deleted (left isolated, ids kept) and N(A_i) made a
/// clique. `deleted` receives the union of the A_i.
SimpleGraph pocket_reduction(const SimpleGraph& g, const std::vector<std::vector<Vertex>>& A,
                             VertexMask* deleted = nullptr);

/// N(S) in g for a vertex set S, ascending.
std::vector<Vertex> neighborhood(const SimpleGraph& g, const std::vector<Vertex>& S);

/// Empty if the certificate is valid, otherwise the first failed condition.
/// Throws MalformedCertificate for ids out of range, an empty A_i, a vertex
/// repeated inside one A_i or among the terminals, or a rotation table whose
/// size differs from |V(G)|.
std::string three_planar_defect(const SimpleGraph& g, const ThreePlanarCertificate& cert);
inline bool verify_3planar_certificate(const SimpleGraph& g, const ThreePlanarCertificate& cert) {
  return three_planar_defect(g, cert).empty();
}

struct DischargeWitness {
  enum class Kind { InteriorVertex, OuterEdge };
  Kind kind = Kind::InteriorVertex;
  Vertex u = -1;  // the interior vertex, or one end of the outer edge
  Vertex v = -1;  // other end of the outer edge, -1 for a vertex witness
  int degree = 0;  // d(u), or d(u) + d(v)
};

/// Scans the interior vertices (ascending) for d <= 6, then the outer cycle
/// edges for ends avoiding x, y with degree sum <= 7. Throws
/// NotThreeConnected, NotPlanar (including an outer walk that is not a
/// cycle), PreconditionViolated unless x, y are distinct outer vertices, and
/// WitnessNotFound if neither kind exists.
DischargeWitness discharge_witness(const SimpleGraph& h, const RotationEmbedding& emb, Vertex x,
                                   Vertex y);

struct PlaneGraph {
  SimpleGraph graph;
  RotationEmbedding embedding;
};

/// A 3-connected plane graph on n >= 4 vertices: a stacked triangulation
/// grown from K4, randomized by edge flips, then thinned by deleting edges
/// that keep it 3-connected. The outer face is a uniformly chosen face.
/// Deterministic in seed. Throws ParameterError for n < 4.
PlaneGraph random_plane_graph(int n, std::uint64_t seed, double delete_fraction = 0.25);

}  // namespace hlink
