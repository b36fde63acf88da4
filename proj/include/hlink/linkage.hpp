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
#include <optional>
#include <span>
#include <vector>

#include "hlink/graph.hpp"

namespace hlink {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

enum class LinkStatus { Linked, NotLinked, Exhausted };
const char* to_string(LinkStatus s) noexcept;

struct LinkageResult {
  LinkStatus status = LinkStatus::Exhausted;
  std::optional<Subdivision> subdivision;  // set iff Linked
  std::uint64_t nodes_explored = 0;
  /// The search space was fully explored (always true for NotLinked).
  bool complete = false;

  bool linked() const noexcept { return status == LinkStatus::Linked; }
};

/// Exact backtracking search for an H-subdivision extending φ.
///
/// Pattern edges are routed one at a time in descending order of pattern
/// endpoint-degree sum (ties: smaller placed ids first); each route is
/// enumerated depth-first with neighbors ascending. Parallel copies of one
/// pattern pair are generated in increasing order of their second vertex,
/// which removes permutations of equivalent routes. Nodes are counted per
/// path extension. Throws BudgetNonPositive when budget == 0 and
/// InvalidPlacement for a bad φ.
LinkageResult find_subdivision(const SimpleGraph& g, const PatternMultigraph& h,
                               const Placement& phi, std::uint64_t budget = kDefaultBudget);

/// Same search with an explicit routing order (a permutation of edge
/// indices of h).
LinkageResult find_subdivision(const SimpleGraph& g, const PatternMultigraph& h,
                               const Placement& phi, std::span<const int> edge_order,
                               std::uint64_t budget = kDefaultBudget);

/// k_i internally disjoint v_i v_{i+1} paths on each side, all mutually
/// internally disjoint. Direct placed-placed edges are taken first; one
/// positive side is Menger, two sides a fan to duplicated targets, three
/// sides a good-paths search after duplicating the placed vertices, with a
/// fallback to find_subdivision if that search runs out of budget. Routes
/// follow PatternMultigraph::fat_triangle edge order. Throws
/// DegenerateParameters when all k_i are zero.
LinkageResult find_fat_triangle_linkage(const SimpleGraph& g, Vertex v1, Vertex v2, Vertex v3,
                                        int k1, int k2, int k3,
                                        std::uint64_t budget = kDefaultBudget);

/// Kite subdivision at u2 (center), u1, u3, u4: routes u2u1, u1u3, u3u2,
/// u2u4 in that order, the pendant route last.
LinkageResult find_kite_linkage(const SimpleGraph& g, Vertex u2, Vertex u1, Vertex u3,
                                Vertex u4, std::uint64_t budget = kDefaultBudget);

/// All injective placements of h into g, keeping only the lexicographically
/// least member of each orbit under h's listed automorphisms.
std::vector<Placement> quotient_placements(const SimpleGraph& g, const PatternMultigraph& h);

/// Up to `count` distinct random injective placements drawn from `seed`.
std::vector<Placement> sample_placements(const SimpleGraph& g, const PatternMultigraph& h,
                                         std::size_t count, std::uint64_t seed);

enum class Verdict { Linked, NotLinked, Inconclusive };
const char* to_string(Verdict v) noexcept;

struct PlacementOutcome {
  Placement placement;
  LinkageResult result;
};

struct LinkedReport {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<PlacementOutcome> outcomes;  // in scan order
  std::uint64_t total_nodes = 0;
  std::size_t exhausted = 0;
  std::size_t not_linked = 0;
};

struct ScanOptions {
  enum class Mode { All, Sample };
  Mode mode = Mode::All;
  std::size_t count = 0;  // Sample only
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
  int jobs = 1;  // <= 0 means the OpenMP default
};

/// Verdict over placements: Linked only if every scanned placement is
/// Linked; NotLinked if some placement is (completely) NotLinked; otherwise
/// Inconclusive. Placements are scanned in parallel with OpenMP.
LinkedReport is_h_linked(const SimpleGraph& g, const PatternMultigraph& h,
                         const ScanOptions& options = {});
/// Single-threaded reference scan; outcomes match is_h_linked exactly.
LinkedReport is_h_linked_serial(const SimpleGraph& g, const PatternMultigraph& h,
                                const ScanOptions& options = {});

/// Scans an explicit placement list (parallel unless jobs == 1).
LinkedReport scan_placements(const SimpleGraph& g, const PatternMultigraph& h,
                             const std::vector<Placement>& placements, std::uint64_t budget,
                             int jobs);

}  // namespace hlink
