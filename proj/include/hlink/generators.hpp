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
#include <random>
#include <string_view>
#include <vector>

#include "hlink/graph.hpp"

namespace hlink {

/// Seeded generator with bit-stable derived draws. std::mt19937_64 output is
/// fixed by the standard; the distributions on top are done by hand because
/// the standard library ones are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Derives an independent stream seed for instance `id` of a campaign.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t id) noexcept;

inline constexpr std::string_view kGeneratorId = "mt19937_64+gnp-ramp+thin/1";

struct KConnectedOptions {
  int max_attempts = 4000;
  /// Remove edges (shuffled order) while κ stays >= k, so instances sit
  /// near the threshold instead of being dense G(n,p) samples.
  bool thin = true;
};

/// A graph with κ >= k on n vertices, deterministic in seed. Samples
/// G(n, p) with p ramping up across attempts, rejects until κ >= k, then
/// optionally thins. The result is always re-verified. Throws
/// ParameterError when n < k + 1 and GenerationBudgetExceeded when no
/// sample passes.
SimpleGraph random_k_connected(int n, int k, std::uint64_t seed,
                               const KConnectedOptions& options = {});

struct Gadget {
  SimpleGraph graph;
  Placement placement;  // images of v1, v2, v3
  std::vector<Vertex> separator;
  std::vector<std::vector<Vertex>> parts;  // C1, C2, C3
};

/// Clique S on k-1 = k1+k2+k3-1 vertices (ids 0..k-2), then cliques C1, C2,
/// C3 of size m, each joined completely to S and not to each other. The
/// placement takes the first vertex of each C_i. m <= 0 selects m = k.
/// Throws ParameterError unless k1, k2 >= 1, k3 >= 0, k >= 2.
Gadget sharpness_gadget(int k1, int k2, int k3, int m = 0);

}  // namespace hlink
