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

#include "hlink/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "hlink/connectivity.hpp"
#include "hlink/io.hpp"
#include "hlink/mader.hpp"
#include "hlink/parallel.hpp"
#include "hlink/planar.hpp"
#include "hlink/structures.hpp"

namespace hlink {

const char* to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Exhausted: return "exhausted";
    case Outcome::Skipped: return "skipped";
    case Outcome::Error: return "error";
  }
  return "?";
}

int CampaignReport::exit_code() const noexcept {
  if (summary.failed + summary.errors + summary.falsifications > 0) return 1;
  if (summary.exhausted > 0) return 3;
  return 0;
}

std::vector<std::array<int, 4>> sharpness_cases() {
  std::vector<std::array<int, 4>> out;
  for (int k1 = 1; k1 <= 4; ++k1)
    for (int k2 = 1; k2 <= 4; ++k2)
      for (int k3 = 0; k3 <= 3; ++k3) {
        int k = k1 + k2 + k3;
        if (k < 3 || k > 5) continue;
        for (int m = 1; m <= 2; ++m) out.push_back({k1, k2, k3, m});
      }
  return out;
}

ConnSepInstance random_connsep_instance(Rng& rng, int max_cycle) {
  while (true) {
    const int L = 4 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_cycle - 3)));
    const int a = 1 + static_cast<int>(rng.below(3));
    std::vector<Edge> e;
    for (int i = 0; i < L; ++i) e.push_back({i, (i + 1) % L});
    for (int i = 0; i < L; ++i)
      for (int j = i + 2; j < L; ++j)
        if (!(i == 0 && j == L - 1) && rng.uniform() < 0.15) e.push_back({i, j});
    for (int i = 1; i < a; ++i) e.push_back({L + i - 1, L + i});
    bool any = false;
    for (int x = L; x < L + a; ++x)
      for (int v = 0; v < L; ++v)
        if (rng.uniform() < 0.3) e.push_back({v, x}), any = true;
    if (!any) e.push_back({static_cast<Vertex>(rng.below(L)), L});
    SimpleGraph g(L + a, e);
    std::vector<Vertex> cyc(L), A(a);
    for (int i = 0; i < L; ++i) cyc[i] = i;
    for (int i = 0; i < a; ++i) A[i] = L + i;
    Vertex u1 = static_cast<Vertex>(rng.below(L));
    Vertex u2 = static_cast<Vertex>(rng.below(L - 1));
    if (u2 >= u1) ++u2;
    OrientedCycle c(g, cyc);
    if (is_shortest_cycle_through(g, c, u1, u2)) return {std::move(g), std::move(c), u1, u2, std::move(A)};
  }
}

void check_config(const CampaignConfig& c) {
  auto bad = [](const std::string& why) { return Error(ErrorCode::ParameterError, why); };
  if (std::find(std::begin(kCampaignIds), std::end(kCampaignIds), c.theorem) == std::end(kCampaignIds)) {
    throw bad("unknown campaign id '" + c.theorem + "'");
  }
  if (c.count < 0) throw bad("count must be >= 0");
  if (c.budget == 0) throw Error(ErrorCode::BudgetNonPositive, "budget must be positive");
  struct Range {
    std::string_view id;
    int lo, hi;
  };
  static constexpr Range ranges[] = {{"thm1.2", 4, 16},   {"sharpness", 0, 1 << 30},
                                     {"thm2.1", 2, 7},    {"thm5.2", 10, 16},
                                     {"thm1.3", 9, 16},   {"lemma3.1", 4, 12},
                                     {"lemma3.3", 4, 40}};
  for (const auto& r : ranges) {
    if (r.id == c.theorem && (c.n < r.lo || c.n > r.hi)) {
      throw bad(c.theorem + " needs " + std::to_string(r.lo) + " <= n <= " + std::to_string(r.hi));
    }
  }
  if (c.theorem == "thm1.2") {
    auto h = parse_pattern(c.pattern);
    if (h.order() != 3) throw bad("thm1.2 needs a fat-triangle pattern");
    if (static_cast<int>(h.edge_count()) >= c.n) throw bad("thm1.2 needs n > k");
  }
}

namespace {

using Clock = std::chrono::steady_clock;

int pick(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

void no_linkage(InstanceRecord& r, const std::string& what) {
  r.outcome = Outcome::Fail;
  r.falsification = true;
  r.detail = what;
}

void fat_triangle_instance(const CampaignConfig& cfg, InstanceRecord& r) {
  auto h = parse_pattern(cfg.pattern);
  const int k = static_cast<int>(h.edge_count());
  Rng rng(r.seed);
  const int n = pick(rng, std::min(k + 2, cfg.n), cfg.n);
  auto g = random_k_connected(n, k, rng.next());
  r.n = n;
  r.graph_hash = graph_hash(g);
  r.kappa = vertex_connectivity(g);
  ScanOptions opt;
  if (cfg.placements > 0) {
    opt.mode = ScanOptions::Mode::Sample;
    opt.count = static_cast<std::size_t>(cfg.placements);
    opt.seed = rng.next();
  }
  opt.budget = cfg.budget;
  auto rep = is_h_linked_serial(g, h, opt);
  r.placements = rep.outcomes.size();
  r.nodes = rep.total_nodes;
  for (const auto& o : rep.outcomes) {
    if (o.result.linked()) {
      if (!validate_subdivision(g, h, *o.result.subdivision)) {
        throw Error(ErrorCode::InvalidPath, "invalid subdivision returned");
      }
      ++r.linked;
    } else if (o.result.status == LinkStatus::NotLinked && r.outcome != Outcome::Fail) {
      std::string at;
      for (Vertex v : o.placement.images) at += (at.empty() ? "" : ",") + std::to_string(v);
      no_linkage(r, "not linked at placement " + at);
    }
  }
  if (r.outcome == Outcome::Fail) return;
  r.outcome = rep.exhausted ? Outcome::Exhausted : Outcome::Pass;
}

void sharpness_instance(const CampaignConfig& cfg, InstanceRecord& r) {
  auto cases = sharpness_cases();
  if (r.id >= cases.size()) {
    r.outcome = Outcome::Skipped;
    r.detail = "no case";
    return;
  }
  auto [k1, k2, k3, m] = cases[r.id];
  auto gad = sharpness_gadget(k1, k2, k3, m);
  const auto& g = gad.graph;
  r.n = g.order();
  r.graph_hash = graph_hash(g);
  r.kappa = vertex_connectivity(g);
  r.placements = 1;
  r.detail = "F(" + std::to_string(k1) + "," + std::to_string(k2) + "," + std::to_string(k3) +
             ") m=" + std::to_string(m);
  auto res = find_fat_triangle_linkage(g, gad.placement[0], gad.placement[1], gad.placement[2], k1,
                                       k2, k3, cfg.budget);
  r.nodes = res.nodes_explored;
  if (res.status == LinkStatus::Exhausted) {
    r.outcome = Outcome::Exhausted;
  } else if (res.linked()) {
    no_linkage(r, r.detail + ": gadget placement is linked");
  } else if (r.kappa != k1 + k2 + k3 - 1 || !res.complete) {
    r.outcome = Outcome::Fail;
    r.detail += ": connectivity " + std::to_string(r.kappa);
  } else {
    r.outcome = Outcome::Pass;
  }
}

void mader_instance(const CampaignConfig& cfg, InstanceRecord& r) {
  Rng rng(r.seed);
  const int n = pick(rng, 2, cfg.n);
  const double p = 0.3 + 0.4 * rng.uniform();
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform() < p) e.push_back({u, v});
  SimpleGraph g(n, e);
  GroupedTerminals groups;
  const int t = pick(rng, 2, 3);
  for (int i = 0; i < t; ++i) {
    std::set<Vertex> grp;
    const int size = pick(rng, 1, 2);
    while (static_cast<int>(grp.size()) < std::min(size, n)) grp.insert(pick(rng, 0, n - 1));
    groups.groups.emplace_back(grp.begin(), grp.end());
  }
  const int k = pick(rng, 1, 3);
  r.n = n;
  r.graph_hash = graph_hash(g);
  r.kappa = vertex_connectivity(g);
  r.placements = 1;
  r.detail = "t=" + std::to_string(t) + " k=" + std::to_string(k);
  if (dichotomy_check(g, groups, k, cfg.budget)) {
    r.outcome = Outcome::Pass;
    r.linked = 1;
  } else {
    no_linkage(r, r.detail + ": both or neither side of the dichotomy holds");
  }
}

bool kite_linked(const SimpleGraph& g, Vertex u2, Vertex u1, Vertex u3, Vertex u4,
                 std::uint64_t budget, InstanceRecord& r) {
  auto res = find_kite_linkage(g, u2, u1, u3, u4, budget);
  r.nodes += res.nodes_explored;
  ++r.placements;
  if (res.status == LinkStatus::Exhausted) {
    if (r.outcome != Outcome::Fail) r.outcome = Outcome::Exhausted;
    return false;
  }
  if (!res.linked()) {
    no_linkage(r, "kite not linked at " + std::to_string(u2) + "," + std::to_string(u1) + "," +
                      std::to_string(u3) + "," + std::to_string(u4));
    return false;
  }
  if (!validate_subdivision(g, PatternMultigraph::kite(), *res.subdivision)) {
    throw Error(ErrorCode::InvalidPath, "invalid kite returned");
  }
  ++r.linked;
  return true;
}

void flower_kite_instance(const CampaignConfig& cfg, InstanceRecord& r) {
  Rng rng(r.seed);
  const int n = pick(rng, 10, cfg.n);
  auto g = random_k_connected(n, 7, rng.next());
  r.n = n;
  r.graph_hash = graph_hash(g);
  r.kappa = vertex_connectivity(g);
  r.outcome = Outcome::Pass;
  int flowers = 0;
  for (int attempt = 0; attempt < 60 && flowers < 10; ++attempt) {
    std::vector<Vertex> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i;
    rng.shuffle(vs);
    try {
      auto f = find_flower(g, vs[0], vs[1], vs[2], vs[3], cfg.budget);
      if (!f) continue;
      if (!verify_flower(g, *f)) throw Error(ErrorCode::InvalidPath, "invalid flower returned");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Exhausted) throw;
      continue;
    }
    ++flowers;
    kite_linked(g, vs[1], vs[0], vs[2], vs[3], cfg.budget, r);
  }
  if (flowers == 0) {
    r.outcome = Outcome::Skipped;
    r.detail = "no flower found";
  }
}

void kite_instance(const CampaignConfig& cfg, InstanceRecord& r) {
  Rng rng(r.seed);
  const int n = pick(rng, 9, cfg.n);
  auto g = random_k_connected(n, 8, rng.next());
  r.n = n;
  r.graph_hash = graph_hash(g);
  r.kappa = vertex_connectivity(g);
  r.outcome = Outcome::Pass;
  auto placements = sample_placements(g, PatternMultigraph::kite(),
                                      static_cast<std::size_t>(std::max(cfg.placements, 1)), rng.next());
  for (const auto& p : placements) kite_linked(g, p[0], p[1], p[2], p[3], cfg.budget, r);
}

// Positions of `order` along p, non-decreasing; equal only where the same
// vertex is listed twice in a row.
bool through_in_order(const PathSeq& p, const std::vector<Vertex>& order) {
  std::size_t at = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && order[i] == order[i - 1]) continue;
    while (at < p.size() && p.vertices[at] != order[i]) ++at;
    if (at == p.size()) return false;
  }
  return true;
}

std::string connsep_defect(const SimpleGraph& g, const ConnSepInstance& in, const SeparatingPair& p,
                           Vertex x, const ConnSepWitnesses& w) {
  VertexMask on_c(static_cast<std::size_t>(g.order()), 0), allowed;
  for (Vertex v : in.c.vertices()) on_c[v] = 1;
  allowed = on_c;
  for (Vertex v : in.A) allowed[v] = 1;
  auto inside = [](const PathSeq& q, const VertexMask& m) {
    return std::all_of(q.vertices.begin(), q.vertices.end(), [&](Vertex v) { return m[v] != 0; });
  };
  bool touches = false;
  for (Vertex v : in.A) touches = touches || (g.contains(w.a) && g.adjacent(w.a, v));
  if (!g.contains(w.a) || !on_c[w.a] || !touches) return "(i): a has no neighbor in A";
  if (!w.path_i.is_path_in(g) || !inside(w.path_i, on_c) ||
      !through_in_order(w.path_i, {x, in.u1, in.u2, w.a})) {
    return "(i): bad path";
  }
  if (!w.cycle_ii) return "(ii): no cycle";
  auto r1 = p.R1.interior();
  const auto& cyc = *w.cycle_ii;
  if (!cyc.is_cycle_in(g) || !cyc.contains(in.u1) || !cyc.contains(in.u2)) return "(ii): bad cycle";
  for (Vertex v : cyc.vertices()) {
    if (!allowed[v] || std::find(r1.begin(), r1.end(), v) != r1.end()) return "(ii): cycle leaves range";
  }
  auto r2 = p.R2.interior();
  if (w.paths_iii.size() != r2.size()) return "(iii): wrong path count";
  for (std::size_t j = 0; j < r2.size(); ++j) {
    const auto& q = w.paths_iii[j];
    if (!q.is_path_in(g) || !inside(q, allowed) || !through_in_order(q, {x, in.u1, in.u2, r2[j]})) {
      return "(iii): bad path";
    }
  }
  return {};
}

void connsep_instance(const CampaignConfig& cfg, InstanceRecord& r) {
  Rng rng(r.seed);
  auto in = random_connsep_instance(rng, cfg.n);
  const auto& g = in.g;
  r.n = g.order();
  r.graph_hash = graph_hash(g);
  r.kappa = vertex_connectivity(g);
  auto p = find_special_separating_pair(g, in.c, in.u1, in.u2, in.A);
  auto xs = p.R1.interior();
  if (xs.empty()) {
    r.outcome = Outcome::Skipped;
    r.detail = "int(R1) empty";
    return;
  }
  r.outcome = Outcome::Pass;
  for (Vertex x : xs) {
    ++r.placements;
    auto w = connsep_witnesses(g, p, x, cfg.budget);
    if (auto why = connsep_defect(g, in, p, x, w); !why.empty()) {
      throw Error(ErrorCode::InvalidPath, "x=" + std::to_string(x) + " " + why);
    }
    ++r.linked;
  }
}

void discharge_instance(const CampaignConfig& cfg, InstanceRecord& r) {
  Rng rng(r.seed);
  const int n = pick(rng, 4, cfg.n);
  auto pg = random_plane_graph(n, rng.next());
  const auto& h = pg.graph;
  const auto& z = pg.embedding.outer;
  r.n = n;
  r.graph_hash = graph_hash(h);
  r.kappa = vertex_connectivity(h);
  r.outcome = Outcome::Pass;
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      ++r.placements;
      auto w = discharge_witness(h, pg.embedding, z[i], z[j]);
      bool ok;
      if (w.kind == DischargeWitness::Kind::InteriorVertex) {
        ok = std::find(z.begin(), z.end(), w.u) == z.end() && h.degree(w.u) <= 6;
      } else {
        std::set<Vertex> xy{z[i], z[j]};
        ok = h.adjacent(w.u, w.v) && !xy.count(w.u) && !xy.count(w.v) &&
             h.degree(w.u) + h.degree(w.v) <= 7;
      }
      if (!ok) throw Error(ErrorCode::InvalidPath, "bad discharge witness");
      ++r.linked;
    }
  }
}

void tally(CampaignReport& rep) {
  CampaignSummary s;
  for (const auto& r : rep.instances) {
    switch (r.outcome) {
      case Outcome::Pass: ++s.passed; break;
      case Outcome::Fail: ++s.failed; break;
      case Outcome::Exhausted: ++s.exhausted; break;
      case Outcome::Skipped: ++s.skipped; break;
      case Outcome::Error: ++s.errors; break;
    }
    s.falsifications += r.falsification;
  }
  rep.summary = s;
}

std::size_t instance_count(const CampaignConfig& cfg) {
  if (cfg.theorem == "sharpness") {
    return std::min(static_cast<std::size_t>(cfg.count), sharpness_cases().size());
  }
  return static_cast<std::size_t>(cfg.count);
}

}  // namespace

InstanceRecord run_instance(const CampaignConfig& cfg, std::size_t id) {
  InstanceRecord r;
  r.id = id;
  r.seed = derive_seed(cfg.seed, id);
  auto start = Clock::now();
  try {
    const auto& t = cfg.theorem;
    if (t == "thm1.2") fat_triangle_instance(cfg, r);
    else if (t == "sharpness") sharpness_instance(cfg, r);
    else if (t == "thm2.1") mader_instance(cfg, r);
    else if (t == "thm5.2") flower_kite_instance(cfg, r);
    else if (t == "thm1.3") kite_instance(cfg, r);
    else if (t == "lemma3.1") connsep_instance(cfg, r);
    else if (t == "lemma3.3") discharge_instance(cfg, r);
    else throw Error(ErrorCode::ParameterError, "unknown campaign id '" + t + "'");
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::Exhausted:
      case ErrorCode::BudgetExceeded:
      case ErrorCode::Inconclusive:
        r.outcome = Outcome::Exhausted;
        break;
      default:
        r.outcome = is_falsification(e.code()) ? Outcome::Fail : Outcome::Error;
        r.falsification = is_falsification(e.code());
        break;
    }
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.outcome = Outcome::Error;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

CampaignReport run_campaign(const CampaignConfig& config) {
  check_config(config);
  CampaignReport rep;
  rep.config = config;
  rep.threads = resolve_jobs(config.jobs);
  const auto count = static_cast<std::int64_t>(instance_count(config));
  rep.instances.resize(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 1) num_threads(rep.threads)
  for (std::int64_t id = 0; id < count; ++id) {
    rep.instances[static_cast<std::size_t>(id)] = run_instance(config, static_cast<std::size_t>(id));
  }
  tally(rep);
  return rep;
}

CampaignReport run_campaign_serial(const CampaignConfig& config) {
  check_config(config);
  CampaignReport rep;
  rep.config = config;
  rep.threads = 1;
  const std::size_t count = instance_count(config);
  for (std::size_t id = 0; id < count; ++id) rep.instances.push_back(run_instance(config, id));
  tally(rep);
  return rep;
}

}  // namespace hlink
