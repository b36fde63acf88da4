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
#include <string>
#include <string_view>
#include <vector>

#include "hlink/generators.hpp"
#include "hlink/graph.hpp"
#include "hlink/linkage.hpp"

namespace hlink {

/// Campaign ids accepted by run_campaign.
inline constexpr std::string_view kCampaignIds[] = {"thm1.2", "sharpness", "thm2.1", "thm5.2",
                                                    "thm1.3", "lemma3.1", "lemma3.3"};

struct CampaignConfig {
  std::string theorem;
  int n = 10;
  int count = 10;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  int jobs = 1;
  /// thm1.2 only: the fat triangle, and the number of sampled placements
  /// per graph (0 scans all placements up to symmetry).
  std::string pattern = "F(2,1,1)";
  int placements = 30;
};

enum class Outcome { Pass, Fail, Exhausted, Skipped, Error };
const char* to_string(Outcome o) noexcept;

struct InstanceRecord {
  std::size_t id = 0;
  std::uint64_t seed = 0;
  std::string graph_hash;
  int n = 0;
  int kappa = -1;
  std::size_t placements = 0;  // placements or sub-checks tried
  std::size_t linked = 0;      // of those, the ones that passed
  Outcome outcome = Outcome::Skipped;
  bool falsification = false;
  std::uint64_t nodes = 0;
  double seconds = 0;
  std::string detail;
};

struct CampaignSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t exhausted = 0;
  std::size_t skipped = 0;
  std::size_t errors = 0;
  std::size_t falsifications = 0;
};

struct CampaignReport {
  CampaignConfig config;
  int threads = 1;
  std::vector<InstanceRecord> instances;  // sorted by id
  CampaignSummary summary;

  /// 0 all passed, 1 a failed check, 3 budget ran out with no failure.
  int exit_code() const noexcept;
};

/// Runs instance `id` of a campaign. Pure in (config, id): the instance
/// seed is derive_seed(config.seed, id).
InstanceRecord run_instance(const CampaignConfig& config, std::size_t id);

/// OpenMP over instance ids with config.jobs threads.
CampaignReport run_campaign(const CampaignConfig& config);
/// Single-threaded reference loop; records match run_campaign except for
/// wall time.
CampaignReport run_campaign_serial(const CampaignConfig& config);

/// Throws ParameterError for an unknown id or out-of-range n.
void check_config(const CampaignConfig& config);

/// (k1, k2, k3, m) for the sharpness campaign: k1, k2 >= 1, k3 >= 0,
/// 3 <= k <= 5, m in {1, 2}, in lexicographic order.
std::vector<std::array<int, 4>> sharpness_cases();

/// Host for separating-pair checks: the cycle C = 0..L-1 (4 <= L <=
/// max_cycle) with random chords, and A = L.. as a path with random
/// attachments to C. Resampled until C is a shortest u1-u2 cycle of G[V(C)].
struct ConnSepInstance {
  SimpleGraph g;
  OrientedCycle c;
  Vertex u1 = -1;
  Vertex u2 = -1;
  std::vector<Vertex> A;
};
ConnSepInstance random_connsep_instance(Rng& rng, int max_cycle = 10);

}  // namespace hlink
