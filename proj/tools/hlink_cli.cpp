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

// hlink: single linkage queries and seeded verification campaigns.
//
// Exit codes: 0 ok, 1 falsification-grade event or failed check, 2 usage or
// parse error, 3 budget exhausted without a verdict.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "hlink/campaign.hpp"
#include "hlink/connectivity.hpp"
#include "hlink/generators.hpp"
#include "hlink/io.hpp"
#include "hlink/linkage.hpp"
#include "hlink/mader.hpp"
#include "hlink/report.hpp"
#include "hlink/structures.hpp"

namespace {

using namespace hlink;

constexpr int kOk = 0, kFalsified = 1, kUsage = 2, kBudget = 3;

SimpleGraph load_graph(const std::string& path) {
  if (path != "-") return read_graph_file(path);
  std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  return parse_graph(text);
}

void need(const std::vector<int>& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw Error(ErrorCode::ArityMismatch, std::string(what) + " needs " + std::to_string(n) + " values");
  }
}

// "0,1;2,3;4" -> {{0,1},{2,3},{4}}; '/' also separates groups.
GroupedTerminals parse_groups(std::string spec) {
  std::replace(spec.begin(), spec.end(), '/', ';');
  GroupedTerminals g;
  std::stringstream groups(spec);
  std::string part;
  while (std::getline(groups, part, ';')) {
    std::vector<Vertex> grp;
    std::stringstream ids(part);
    std::string id;
    while (std::getline(ids, id, ',')) {
      try {
        std::size_t used = 0;
        grp.push_back(std::stoi(id, &used));
        if (used != id.size()) throw std::invalid_argument(id);
      } catch (const std::exception&) {
        throw ParseError(0, "bad vertex id '" + id + "' in --groups");
      }
    }
    g.groups.push_back(std::move(grp));
  }
  return g;
}

void emit(const Json& j, const std::string& out = {}) {
  std::cout << j.dump(2) << '\n';
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw Error(ErrorCode::ParameterError, "cannot write " + out);
    f << j.dump(2) << '\n';
  }
}

Json graph_summary(const SimpleGraph& g) {
  return {{"n", g.order()}, {"m", g.size()}, {"graph_hash", graph_hash(g)}};
}

int status_exit(LinkStatus s) { return s == LinkStatus::Exhausted ? kBudget : kOk; }

// A returned witness that fails validation is a bug, reported as exit 1.
int checked(const SimpleGraph& g, const PatternMultigraph& h, const LinkageResult& r, Json& j) {
  if (r.linked()) {
    auto c = validate_subdivision(g, h, *r.subdivision);
    j["valid"] = c.valid();
    if (!c.valid()) return kFalsified;
  }
  return status_exit(r.status);
}

int exit_for(ErrorCode code) {
  if (is_falsification(code)) return kFalsified;
  switch (code) {
    case ErrorCode::Exhausted:
    case ErrorCode::BudgetExceeded:
    case ErrorCode::Inconclusive:
    case ErrorCode::GenerationBudgetExceeded:
      return kBudget;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hlink: H-linkage queries and verification campaigns"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t budget = kDefaultBudget;
  int jobs = 1;
  app.add_option("--budget", budget, "search nodes per placement")->capture_default_str();
  app.add_option("--jobs", jobs, "threads (<= 0: OpenMP default)")->capture_default_str();

  std::string graph_path, pattern, groups_spec, out_path;
  std::vector<int> placement, terminals, ks;
  std::size_t sample = 0;
  std::uint64_t seed = 1;
  bool all = false, certify = false, extremal = false, no_timing = false;
  int m = 0, k = 0;
  CampaignConfig campaign;
  std::function<int()> action;

  auto* conn = app.add_subcommand("connectivity", "vertex connectivity of a graph");
  conn->add_option("graph", graph_path, "graph file, '-' for stdin")->required();
  conn->callback([&] {
    action = [&] {
      auto g = load_graph(graph_path);
      Json j = report_header("connectivity");
      j.update(graph_summary(g));
      j["kappa"] = vertex_connectivity(g);
      emit(j);
      return kOk;
    };
  });

  auto* link = app.add_subcommand("link", "H-linkage for one placement or a placement scan");
  link->add_option("graph", graph_path, "graph file, '-' for stdin")->required();
  link->add_option("--pattern", pattern, "pattern name or file, e.g. F(2,1,1), kite, 2K2")->required();
  auto* place_opt = link->add_option("--placement", placement, "pattern vertex images")->delimiter(',');
  auto* all_opt = link->add_flag("--all", all, "scan all placements up to symmetry");
  auto* sample_opt = link->add_option("--sample", sample, "scan N random placements");
  link->add_option("--seed", seed, "sampling seed")->capture_default_str();
  place_opt->excludes(all_opt)->excludes(sample_opt);
  all_opt->excludes(sample_opt);
  link->callback([&] {
    action = [&] {
      auto g = load_graph(graph_path);
      auto h = read_pattern(pattern);
      Json j = report_header("link");
      j.update(graph_summary(g));
      j["pattern"] = h.name();
      if (!placement.empty()) {
        Placement phi{placement};
        auto r = find_subdivision(g, h, phi, budget);
        j["result"] = to_json(r);
        int code = checked(g, h, r, j);
        emit(j);
        return code;
      }
      ScanOptions opt;
      if (sample > 0) {
        opt.mode = ScanOptions::Mode::Sample;
        opt.count = sample;
        opt.seed = seed;
      }
      opt.budget = budget;
      opt.jobs = jobs;
      auto rep = is_h_linked(g, h, opt);
      j["result"] = to_json(rep);
      emit(j);
      return rep.verdict == Verdict::Inconclusive ? kBudget : kOk;
    };
  });

  auto* fat = app.add_subcommand("fat-triangle", "F(k1,k2,k3) linkage at three terminals");
  fat->add_option("graph", graph_path, "graph file, '-' for stdin")->required();
  fat->add_option("--terminals", terminals, "v1,v2,v3")->delimiter(',')->required();
  fat->add_option("--k", ks, "k1,k2,k3")->delimiter(',')->required();
  fat->callback([&] {
    action = [&] {
      need(terminals, 3, "--terminals");
      need(ks, 3, "--k");
      auto g = load_graph(graph_path);
      auto r = find_fat_triangle_linkage(g, terminals[0], terminals[1], terminals[2], ks[0], ks[1],
                                         ks[2], budget);
      Json j = report_header("fat-triangle");
      j.update(graph_summary(g));
      j["result"] = to_json(r);
      int code = checked(g, PatternMultigraph::fat_triangle(ks[0], ks[1], ks[2]), r, j);
      emit(j);
      return code;
    };
  });

  auto* kite = app.add_subcommand("kite", "kite linkage centered at u2");
  kite->add_option("graph", graph_path, "graph file, '-' for stdin")->required();
  kite->add_option("--terminals", terminals, "u2,u1,u3,u4")->delimiter(',')->required();
  kite->callback([&] {
    action = [&] {
      need(terminals, 4, "--terminals");
      auto g = load_graph(graph_path);
      auto r = find_kite_linkage(g, terminals[0], terminals[1], terminals[2], terminals[3], budget);
      Json j = report_header("kite");
      j.update(graph_summary(g));
      j["result"] = to_json(r);
      int code = checked(g, PatternMultigraph::kite(), r, j);
      emit(j);
      return code;
    };
  });

  auto* mader = app.add_subcommand("mader", "good paths between terminal groups");
  mader->add_option("graph", graph_path, "graph file, '-' for stdin")->required();
  mader->add_option("--groups", groups_spec, "groups like 0,1;2,3;4 (or 0,1/2,3/4)")->required();
  mader->add_option("--k", k, "target number of good paths")->required();
  mader->add_flag("--certify", certify, "also search for a dual certificate and check the dichotomy");
  mader->callback([&] {
    action = [&] {
      auto g = load_graph(graph_path);
      auto groups = parse_groups(groups_spec);
      groups.check(g);
      auto paths = max_good_paths(g, groups, budget);
      Json j = report_header("mader");
      j.update(graph_summary(g));
      j["k"] = k;
      j["good_paths"] = to_json(paths);
      if (!paths.complete) {
        emit(j);
        return kBudget;
      }
      int code = kOk;
      if (certify) {
        auto cert = find_certificate(g, groups, k, budget);
        j["certificate"] = cert ? to_json(*cert) : Json(nullptr);
        bool verified = cert && verify_certificate(g, groups, *cert);
        bool exactly_one = (paths.count >= k) != verified;
        j["dichotomy"] = exactly_one;
        if (!exactly_one) code = kFalsified;
      }
      emit(j);
      return code;
    };
  });

  auto* flower = app.add_subcommand("flower", "(u1,u2,u3,u4)-flower search");
  flower->add_option("graph", graph_path, "graph file, '-' for stdin")->required();
  flower->add_option("--terminals", terminals, "u1,u2,u3,u4")->delimiter(',')->required();
  flower->add_flag("--extremal", extremal, "return a flower optimal under the selection rules");
  flower->callback([&] {
    action = [&] {
      need(terminals, 4, "--terminals");
      auto g = load_graph(graph_path);
      Json j = report_header("flower");
      j.update(graph_summary(g));
      if (extremal) {
        try {
          auto ex = extremal_flower(g, terminals[0], terminals[1], terminals[2], terminals[3], budget);
          auto c = check_extremal_conclusions(g, ex.flower);
          j["flower"] = to_json(ex.flower);
          j["complete"] = ex.complete;
          j["key"] = {{"path_vertices", ex.key.path_vertices},
                      {"block", ex.key.block},
                      {"attached", ex.key.attached},
                      {"detached", ex.key.detached}};
          j["conclusions"] = {{"shortest_cycles", c.shortest_cycles},
                              {"single_edge_paths", c.single_edge_paths},
                              {"rest_three_connected", c.rest_three_connected}};
          emit(j);
          return ex.complete ? kOk : kBudget;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NoFlower) throw;
          j["flower"] = nullptr;
          emit(j);
          return kOk;
        }
      }
      auto f = find_flower(g, terminals[0], terminals[1], terminals[2], terminals[3], budget);
      j["flower"] = f ? to_json(*f) : Json(nullptr);
      if (f) j["valid"] = verify_flower(g, *f);
      emit(j);
      return f && !verify_flower(g, *f) ? kFalsified : kOk;
    };
  });

  auto* gadget = app.add_subcommand("gadget", "sharpness gadget for F(k1,k2,k3)");
  gadget->add_option("--k", ks, "k1,k2,k3")->delimiter(',')->required();
  gadget->add_option("--m", m, "clique size (default k)");
  gadget->add_option("--out", out_path, "write the graph in text format here");
  gadget->callback([&] {
    action = [&] {
      need(ks, 3, "--k");
      auto gad = sharpness_gadget(ks[0], ks[1], ks[2], m);
      Json j = report_header("gadget");
      j.update(graph_summary(gad.graph));
      j["kappa"] = vertex_connectivity(gad.graph);
      j["placement"] = gad.placement.images;
      j["separator"] = gad.separator;
      j["clique_size"] = gad.parts[0].size();
      j["graph"] = Json::parse(emit_graph_json(gad.graph));
      if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw Error(ErrorCode::ParameterError, "cannot write " + out_path);
        f << emit_graph(gad.graph);
      }
      emit(j);
      return kOk;
    };
  });

  auto* verify = app.add_subcommand("verify", "seeded verification campaign");
  verify->add_option("theorem", campaign.theorem, "thm1.2, sharpness, thm2.1, thm5.2, thm1.3, lemma3.1, lemma3.3")
      ->required();
  verify->add_option("--n", campaign.n, "graph order (maximum)")->capture_default_str();
  verify->add_option("--count", campaign.count, "instances")->capture_default_str();
  verify->add_option("--seed", campaign.seed, "campaign seed")->capture_default_str();
  verify->add_option("--pattern", campaign.pattern, "thm1.2 pattern")->capture_default_str();
  verify->add_option("--placements", campaign.placements, "placements per graph (thm1.2 0 = all)")
      ->capture_default_str();
  verify->add_option("--out", out_path, "also write the report here");
  verify->add_flag("--no-timing", no_timing, "omit wall-clock fields");
  verify->callback([&] {
    action = [&] {
      campaign.budget = budget;
      campaign.jobs = jobs;
      auto rep = run_campaign(campaign);
      emit(to_json(rep, !no_timing), out_path);
      return rep.exit_code();
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "hlink: " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "hlink: " << e.what() << '\n';
    return kUsage;
  }
}
