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

#include "hlink/generators.hpp"

#include <algorithm>

#include "hlink/connectivity.hpp"

namespace hlink {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  while (true) {
    std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t id) noexcept {
  // splitmix64 finalizer over the combined key.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (id + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SimpleGraph random_k_connected(int n, int k, std::uint64_t seed,
                               const KConnectedOptions& options) {
  if (k < 0 || n < k + 1) {
    throw Error(ErrorCode::ParameterError,
                "need n >= k+1 (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  if (n == 1 || k == n - 1) return graphs::complete(n);
  Rng rng(seed);
  const double base = static_cast<double>(k) / (n - 1);
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    double p = std::min(1.0, base + 0.02 * (attempt / 4));
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.uniform() < p) edges.emplace_back(u, v);
    SimpleGraph g(n, edges);
    if (!is_k_connected(g, k)) continue;
    if (options.thin) {
      std::vector<Edge> order = g.edges();
      rng.shuffle(order);
      for (auto [u, v] : order) {
        if (g.degree(u) <= k || g.degree(v) <= k) continue;
        SimpleGraph h = g.without_edge(u, v);
        if (is_k_connected(h, k)) g = std::move(h);
      }
    }
    if (vertex_connectivity(g) < k) {
      throw Error(ErrorCode::GenerationBudgetExceeded, "re-verification failed");
    }
    return g;
  }
  throw Error(ErrorCode::GenerationBudgetExceeded,
              "no " + std::to_string(k) + "-connected sample on " + std::to_string(n) +
                  " vertices after " + std::to_string(options.max_attempts) + " attempts");
}

Gadget sharpness_gadget(int k1, int k2, int k3, int m) {
  const int k = k1 + k2 + k3;
  if (k1 < 1 || k2 < 1 || k3 < 0 || k < 2) {
    throw Error(ErrorCode::ParameterError, "gadget needs k1, k2 >= 1, k3 >= 0");
  }
  if (m <= 0) m = k;
  Gadget out;
  const int s = k - 1;
  const int n = s + 3 * m;
  for (Vertex v = 0; v < s; ++v) out.separator.push_back(v);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < s; ++u)
    for (Vertex v = u + 1; v < s; ++v) edges.emplace_back(u, v);
  for (int i = 0; i < 3; ++i) {
    std::vector<Vertex> part;
    for (int j = 0; j < m; ++j) part.push_back(s + i * m + j);
    for (std::size_t a = 0; a < part.size(); ++a) {
      for (Vertex x = 0; x < s; ++x) edges.emplace_back(x, part[a]);
      for (std::size_t b = a + 1; b < part.size(); ++b) edges.emplace_back(part[a], part[b]);
    }
    out.placement.images.push_back(part.front());
    out.parts.push_back(std::move(part));
  }
  out.graph = SimpleGraph(n, edges);
  return out;
}

}  // namespace hlink
