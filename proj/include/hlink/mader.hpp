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
#include <vector>

#include "hlink/graph.hpp"
#include "hlink/linkage.hpp"

namespace hlink {

/// Terminal groups L_1..L_t (t >= 2, groups may overlap). A good path has
/// its ends in two distinct groups; a vertex lying in two groups is a good
/// path on its own.
struct GroupedTerminals {
  std::vector<std::vector<Vertex>> groups;

  /// Throws ParameterError for t < 2, RangeError for ids outside g.
  void check(const SimpleGraph& g) const;
  /// Bit i set iff v lies in group i (t <= 64).
  std::vector<std::uint64_t> masks(int n) const;
};

struct GoodPaths {
  int count = 0;
  std::vector<PathSeq> paths;
  /// False when the budget ran out; count is then only a lower bound.
  bool complete = true;
  std::uint64_t nodes = 0;
};

/// Maximum set of vertex-disjoint good paths by branch and bound. With
/// target >= 0 the search stops as soon as `target` paths are found (count
/// is then exactly target). Paths never pass through terminals internally.
GoodPaths max_good_paths(const SimpleGraph& g, const GroupedTerminals& groups,
                         std::uint64_t budget = kDefaultBudget, int target = -1);

bool is_good_path(const SimpleGraph& g, const GroupedTerminals& groups, const PathSeq& p);

/// (W, Y_1..Y_n, X_1..X_n) with target k.
struct MaderCertificate {
  std::vector<Vertex> W;
  std::vector<std::vector<Vertex>> Y;
  std::vector<std::vector<Vertex>> X;
  int k = 0;

  /// |W| + sum floor(|X_j| / 2).
  int value() const;
};

/// True iff value < k, no vertex of Y_j - X_j has a neighbor outside
/// W ∪ Y_j, every terminal of Y_j lies in X_j, and G - W with the edges
/// inside each Y_j deleted has no component meeting two groups. Throws
/// MalformedCertificate unless W, Y_j partition V(G) with Y_j nonempty and
/// X_j ⊆ Y_j.
bool verify_certificate(const SimpleGraph& g, const GroupedTerminals& groups,
                        const MaderCertificate& cert);

/// Exhaustive search over W (|W| < k) and partitions of the rest, with each
/// X_j the forced minimum. std::nullopt means none exists. Throws
/// BudgetExceeded when `budget` candidate partitions run out first.
std::optional<MaderCertificate> find_certificate(const SimpleGraph& g,
                                                 const GroupedTerminals& groups, int k,
                                                 std::uint64_t budget = kDefaultBudget);

/// Exactly one of (k good paths exist) and (a certificate for k exists).
/// Throws Inconclusive if either search ran out of budget.
bool dichotomy_check(const SimpleGraph& g, const GroupedTerminals& groups, int k,
                     std::uint64_t budget = kDefaultBudget);

}  // namespace hlink
