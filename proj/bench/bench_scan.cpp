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

// Serial reference vs OpenMP scan. Arg is the thread count for the
// parallel variants; speedups need a machine with more than one core.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "hlink/campaign.hpp"
#include "hlink/generators.hpp"
#include "hlink/linkage.hpp"

namespace {

using namespace hlink;

const SimpleGraph& host() {
  static const SimpleGraph g = random_k_connected(11, 4, 77);
  return g;
}

ScanOptions scan(int jobs) {
  ScanOptions o;
  o.mode = ScanOptions::Mode::Sample;
  o.count = 200;
  o.seed = 5;
  o.jobs = jobs;
  return o;
}

void BM_scan_serial(benchmark::State& state) {
  auto h = PatternMultigraph::fat_triangle(2, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_h_linked_serial(host(), h, scan(1)));
}

void BM_scan_parallel(benchmark::State& state) {
  auto h = PatternMultigraph::fat_triangle(2, 1, 1);
  int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_h_linked(host(), h, scan(jobs)));
}

CampaignConfig campaign(int jobs) {
  CampaignConfig c;
  c.theorem = "thm1.2";
  c.n = 11;
  c.count = 16;
  c.seed = 9;
  c.jobs = jobs;
  return c;
}

void BM_campaign_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign_serial(campaign(1)));
}

void BM_campaign_parallel(benchmark::State& state) {
  int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign(campaign(jobs)));
}

void threads(benchmark::internal::Benchmark* b) {
  int max = omp_get_max_threads();
  for (int t = 1; t <= max; t *= 2) b->Arg(t);
  if (max > 1 && (max & (max - 1)) != 0) b->Arg(max);
}

}  // namespace

BENCHMARK(BM_scan_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_parallel)->Apply(threads)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_campaign_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_campaign_parallel)->Apply(threads)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
