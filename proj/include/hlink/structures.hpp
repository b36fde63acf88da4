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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hlink/graph.hpp"
#include "hlink/linkage.hpp"

namespace hlink {

// ------------------------------------------------------------ separating pairs

/// {R1, R2} for (u1, u2, C, A). C is stored in the orientation that makes
/// the pair valid: R1 is a subpath of C[u1,u2] and R2 of C[u2,u1], each
/// listed in arc order. Either R_i may be empty, and both may contain u1 or
/// u2 when those are attachments of A.
struct SeparatingPair {
  OrientedCycle C;
  Vertex u1 = -1;
  Vertex u2 = -1;
  std::vector<Vertex> A;
  PathSeq R1;
  PathSeq R2;

  const PathSeq& R(int i) const { return i == 1 ? R1 : R2; }
  std::size_t total() const noexcept { return R1.size() + R2.size(); }
  /// r_i^j: the end of R_i closest to u_j along C[u_i, u_{3-i}]. Empty when
  /// R_i is empty.
  std::optional<Vertex> r(int i, int j) const;
};

/// Conditions (i)-(iii) in the stored orientation.
bool is_separating_pair(const SimpleGraph& g, const SeparatingPair& p);

/// Minimum |V(R1)|+|V(R2)| over both orientations of c and all subpath pairs
/// of the two arcs. Ties keep the given orientation, then the smallest
/// (start, end) positions of R1, then of R2. Throws VertexNotOnCycle, and
/// PreconditionViolated when u1 == u2, A is empty, or A meets c.
SeparatingPair find_special_separating_pair(const SimpleGraph& g, const OrientedCycle& c,
                                            Vertex u1, Vertex u2,
                                            const std::vector<Vertex>& A);

struct ConnSepWitnesses {
  /// (i): a vertex of C with a neighbor in A, and a path in G[V(C)] through
  /// x, u1, u2, a in order (a may be u2).
  Vertex a = -1;
  PathSeq path_i;
  /// (ii), set when G[A] is connected: a cycle through u1 and u2 in
  /// G[V(C) ∪ A] - int(R1).
  std::optional<OrientedCycle> cycle_ii;
  /// (iii), when G[A] is connected: for each x' in int(R2) (arc order), a
  /// path in G[V(C) ∪ A] through x, u1, u2, x' in order.
  std::vector<PathSeq> paths_iii;
};

/// True if no cycle of G[V(c)] through a and b has fewer vertices than c.
bool is_shortest_cycle_through(const SimpleGraph& g, const OrientedCycle& c, Vertex a, Vertex b);

/// Direct searches for the three witnesses. C must be a shortest u1-u2
/// cycle in G[V(C)]: without that, chords of C can leave u1 with no route
/// around int(R1) and all three statements fail on small instances. Throws
/// PreconditionViolated unless x is in int(R1) and C is shortest,
/// WitnessNotFound when a witness does not exist, and Exhausted when
/// `budget` search nodes run out.
ConnSepWitnesses connsep_witnesses(const SimpleGraph& g, const SeparatingPair& p, Vertex x,
                                   std::uint64_t budget = kDefaultBudget);

// -------------------------------------------------------------------- flowers

/// (C1, C2, C3, P1, P2, P3) anchored at u1..u4 (stored as u[0..3]). P_i runs
/// from u_i to v_i on C3. C3 is stored so that v1, v2, v3, u4 occur in its
/// forward order when the flower is valid.
struct Flower {
  std::array<Vertex, 4> u{-1, -1, -1, -1};
  OrientedCycle C1;
  OrientedCycle C2;
  OrientedCycle C3;
  PathSeq P1;
  PathSeq P2;
  PathSeq P3;

  const OrientedCycle& C(int i) const { return i == 1 ? C1 : i == 2 ? C2 : C3; }
  const PathSeq& P(int i) const { return i == 1 ? P1 : i == 2 ? P2 : P3; }
  /// v_i, the end of P_i on C3.
  Vertex v(int i) const { return P(i).back(); }
};

/// Empty if f is a flower in g, otherwise a short description of the first
/// violated condition.
std::string flower_defect(const SimpleGraph& g, const Flower& f);
inline bool verify_flower(const SimpleGraph& g, const Flower& f) {
  return flower_defect(g, f).empty();
}

/// Backtracking search over C1, C2, C3 (each by increasing length) and then
/// the three paths. The order condition on C3 is read in either direction,
/// so a flower for the roles with u1 and u3 swapped is also found here.
/// std::nullopt only after a complete search; throws Exhausted when
/// `budget` nodes run out and PreconditionViolated unless the u_i are
/// distinct vertices of g.
std::optional<Flower> find_flower(const SimpleGraph& g, Vertex u1, Vertex u2, Vertex u3,
                                  Vertex u4, std::uint64_t budget = kDefaultBudget);

/// Q[0] joins u1 and u3, Q[1..3] join u1 and u2, Q[4..6] join u2 and u3.
using QSystem = std::array<PathSeq, 7>;

/// Throws PreconditionViolated unless Q has the required ends, its paths
/// are internally disjoint paths of g, and none of them meets u4.
void check_q_system(const SimpleGraph& g, Vertex u1, Vertex u2, Vertex u3, Vertex u4,
                    const QSystem& q);

/// A Q-system from an F(3,3,1) subdivision of G - u4 at (u1, u2, u3), or
/// std::nullopt if there is none. Throws Exhausted on budget.
std::optional<QSystem> find_q_system(const SimpleGraph& g, Vertex u1, Vertex u2, Vertex u3,
                                     Vertex u4, std::uint64_t budget = kDefaultBudget);

struct FlowerOrKite {
  /// A Flower or a kite Subdivision (pattern PatternMultigraph::kite(),
  /// placement (u2, u1, u3, u4)).
  std::variant<Flower, Subdivision> outcome;
  /// Short name of the construction step that produced the outcome.
  std::string construction;
  /// True when the explicit construction did not validate and the result
  /// came from the exhaustive kite or flower search instead.
  bool from_search = false;

  bool is_flower() const noexcept { return std::holds_alternative<Flower>(outcome); }
};

/// Builds the 5-fan from u4 to u2 in G - {u1, u3} and follows the
/// first-intersection case analysis on Q. Every candidate is validated
/// before it is returned. Throws PreconditionViolated for a bad Q-system or
/// a missing fan, and CaseAnalysisIncomplete if neither the construction nor
/// the exhaustive searches yield a valid outcome.
FlowerOrKite flower_or_kite(const SimpleGraph& g, Vertex u1, Vertex u2, Vertex u3, Vertex u4,
                            const QSystem& q, std::uint64_t budget = kDefaultBudget);

/// Selection key for extremal flowers. H = G - V(C1 ∪ C2), B is the block of
/// H containing C3, and the component sizes of H - V(B) are split by
/// whether they meet the flower, each sorted descending.
struct FlowerKey {
  int path_vertices = 0;  // sum of |V(P_i)|
  int block = 0;          // |V(B)|
  std::vector<int> attached;
  std::vector<int> detached;

  friend bool operator==(const FlowerKey&, const FlowerKey&) = default;
};

/// Strictly preferred: fewer path vertices, then a larger block, then
/// lexicographically larger attached sizes, then detached sizes.
bool better(const FlowerKey& a, const FlowerKey& b);
FlowerKey flower_key(const SimpleGraph& g, const Flower& f);

struct ExtremalFlower {
  Flower flower;
  FlowerKey key;
  bool complete = false;  // false: best found before the budget ran out
  std::uint64_t nodes = 0;
};

/// Branch and bound over all flowers for the given roles, returning a best
/// one under `better`. Throws NoFlower after a complete search that finds none, and
/// Exhausted if the budget runs out before any flower is found.
ExtremalFlower extremal_flower(const SimpleGraph& g, Vertex u1, Vertex u2, Vertex u3, Vertex u4,
                               std::uint64_t budget = kDefaultBudget);

struct ExtremalConclusions {
  bool shortest_cycles = false;  // no shorter u_i u_{i+1} cycle inside G[V(C_i)]
  bool single_edge_paths = false;
  bool rest_three_connected = false;

  bool all() const noexcept { return shortest_cycles && single_edge_paths && rest_three_connected; }
};

ExtremalConclusions check_extremal_conclusions(const SimpleGraph& g, const Flower& f);

/// For i = 1, 2: every neighbor of C_i - u2 in G - V(C1 ∪ C2) lies on
/// C3[v_i, v_{i+1}].
bool attachments_confined(const SimpleGraph& g, const Flower& f);

// ------------------------------------------------------------------ 2-linkage

/// Vertex-disjoint s1-t1 and s2-t2 paths, as a 2K2 subdivision with
/// placement (s1, t1, s2, t2), or std::nullopt when none exists. Throws
/// InvalidPlacement unless the four vertices are distinct and Exhausted on
/// budget.
std::optional<Subdivision> two_disjoint_paths(const SimpleGraph& g, Vertex s1, Vertex t1,
                                              Vertex s2, Vertex t2,
                                              std::uint64_t budget = kDefaultBudget);

}  // namespace hlink
