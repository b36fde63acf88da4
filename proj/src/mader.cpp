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

#include "hlink/mader.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace hlink {

void GroupedTerminals::check(const SimpleGraph& g) const {
  if (groups.size() < 2) throw Error(ErrorCode::ParameterError, "need at least two groups");
  if (groups.size() > 64) throw Error(ErrorCode::ParameterError, "at most 64 groups");
  for (const auto& grp : groups)
    for (Vertex v : grp)
      if (!g.contains(v)) {
        throw Error(ErrorCode::RangeError, "terminal " + std::to_string(v) + " not in graph");
      }
}

std::vector<std::uint64_t> GroupedTerminals::masks(int n) const {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (Vertex v : groups[i]) out[v] |= std::uint64_t{1} << i;
  return out;
}

bool is_good_path(const SimpleGraph& g, const GroupedTerminals& groups, const PathSeq& p) {
  if (!p.is_path_in(g)) return false;
  auto masks = groups.masks(g.order());
  std::uint64_t a = masks[p.front()], b = masks[p.back()];
  if (p.size() == 1) return std::popcount(a) >= 2;
  if (a == 0 || b == 0) return false;
  return !(a == b && std::popcount(a) == 1);
}

namespace {

// Branch and bound over single-group terminals. Vertices in two or more
// groups are taken as trivial paths up front: some maximum solution always
// does so, and no path then needs a terminal in its interior.
class GoodPathSearch {
 public:
  GoodPathSearch(const SimpleGraph& g, const GroupedTerminals& groups, std::uint64_t budget,
                 int target)
      : g_(g), budget_(budget), target_(target) {
    const int n = g.order();
    mask_ = groups.masks(n);
    busy_.assign(static_cast<std::size_t>(n), 0);
    state_.assign(static_cast<std::size_t>(n), kNone);
    for (Vertex v = 0; v < n; ++v) {
      if (std::popcount(mask_[v]) >= 2) {
        trivial_.push_back(PathSeq{{v}});
        busy_[v] = 1;
      } else if (mask_[v] != 0) {
        terminals_.push_back(v);
        state_[v] = kOpen;
      }
    }
    // Twins: same group and same neighborhood (hence non-adjacent).
    std::map<std::pair<std::uint64_t, std::vector<Vertex>>, int> classes;
    twin_.assign(static_cast<std::size_t>(n), -1);
    for (Vertex t : terminals_) {
      auto nb = g.neighbors(t);
      auto key = std::make_pair(mask_[t], std::vector<Vertex>(nb.begin(), nb.end()));
      auto [it, inserted] = classes.emplace(key, static_cast<int>(members_.size()));
      if (inserted) members_.emplace_back();
      twin_[t] = it->second;
      members_[it->second].push_back(t);
    }
    group_count_ = static_cast<int>(groups.groups.size());
  }

  GoodPaths run() {
    GoodPaths out;
    best_ = -1;
    if (target_ < 0 || static_cast<int>(trivial_.size()) < target_) {
      search(0);
    } else {
      best_ = 0;
    }
    out.count = static_cast<int>(trivial_.size()) + std::max(best_, 0);
    out.paths = trivial_;
    out.paths.insert(out.paths.end(), best_paths_.begin(), best_paths_.end());
    if (target_ >= 0 && out.count > target_) {
      out.paths.resize(static_cast<std::size_t>(target_));
      out.count = target_;
    }
    out.complete = !out_of_budget_;
    out.nodes = nodes_;
    return out;
  }

 private:
  static constexpr char kNone = 0, kOpen = 1, kUsed = 2, kDead = 3;

  bool done() const {
    return out_of_budget_ ||
           (target_ >= 0 && best_ + static_cast<int>(trivial_.size()) >= target_);
  }

  void record() {
    int cur = static_cast<int>(chosen_.size());
    if (cur > best_) {
      best_ = cur;
      best_paths_ = chosen_;
    }
  }

  bool tick() {
    if (++nodes_ > budget_) out_of_budget_ = true;
    return !out_of_budget_;
  }

  void search(int) {
    if (!tick()) return;
    record();
    if (done()) return;
    Vertex t = -1;
    int open = 0;
    std::vector<int> per_group(static_cast<std::size_t>(group_count_), 0);
    for (Vertex x : terminals_) {
      if (state_[x] != kOpen) continue;
      if (t < 0) t = x;
      ++open;
      per_group[std::countr_zero(mask_[x])]++;
    }
    if (t < 0) return;
    int largest = *std::max_element(per_group.begin(), per_group.end());
    int bound = static_cast<int>(chosen_.size()) + std::min(open / 2, open - largest);
    if (bound <= best_) return;

    state_[t] = kUsed;
    busy_[t] = 1;
    current_.assign(1, t);
    grow(t);
    busy_[t] = 0;
    if (done()) {
      state_[t] = kOpen;
      return;
    }

    // Skipping t lets us skip its twins too: swapping a twin's path onto t
    // gives an equivalent solution.
    std::vector<Vertex> killed;
    for (Vertex x : members_[twin_[t]]) {
      if (state_[x] == kOpen || x == t) {
        state_[x] = kDead;
        killed.push_back(x);
      }
    }
    search(0);
    for (Vertex x : killed) state_[x] = kOpen;
  }

  // Extends the path in current_ (starting at an open terminal) by one more
  // vertex, closing it at any compatible open terminal.
  void grow(Vertex cur) {
    if (!tick()) return;
    const Vertex start = current_.front();
    for (Vertex y : g_.neighbors(cur)) {
      if (state_[y] == kOpen) {
        if (mask_[y] == mask_[start] || !lowest_open_twin(y)) continue;
        state_[y] = kUsed;
        busy_[y] = 1;
        current_.push_back(y);
        chosen_.push_back(PathSeq{current_});
        auto saved = current_;
        search(0);
        current_ = std::move(saved);
        chosen_.pop_back();
        current_.pop_back();
        busy_[y] = 0;
        state_[y] = kOpen;
        if (done()) return;
        continue;
      }
      if (busy_[y] || state_[y] != kNone) continue;
      busy_[y] = 1;
      current_.push_back(y);
      grow(y);
      current_.pop_back();
      busy_[y] = 0;
      if (done()) return;
    }
  }

  bool lowest_open_twin(Vertex y) const {
    for (Vertex x : members_[twin_[y]]) {
      if (x == y) return true;
      if (state_[x] == kOpen) return false;
    }
    return true;
  }

  const SimpleGraph& g_;
  std::uint64_t budget_;
  int target_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  int group_count_ = 0;
  std::vector<std::uint64_t> mask_;
  VertexMask busy_;
  std::vector<char> state_;
  std::vector<Vertex> terminals_;
  std::vector<int> twin_;
  std::vector<std::vector<Vertex>> members_;
  std::vector<PathSeq> trivial_;
  std::vector<PathSeq> chosen_;
  std::vector<PathSeq> best_paths_;
  std::vector<Vertex> current_;
  int best_ = -1;
};

}  // namespace

GoodPaths max_good_paths(const SimpleGraph& g, const GroupedTerminals& groups,
                         std::uint64_t budget, int target) {
  groups.check(g);
  if (budget == 0) throw Error(ErrorCode::BudgetNonPositive, "search budget must be positive");
  return GoodPathSearch(g, groups, budget, target).run();
}

int MaderCertificate::value() const {
  int v = static_cast<int>(W.size());
  for (const auto& x : X) v += static_cast<int>(x.size()) / 2;
  return v;
}

namespace {

// Block id per vertex: -1 for W, j for Y_j.
std::vector<int> block_of(const SimpleGraph& g, const MaderCertificate& c) {
  const int n = g.order();
  std::vector<int> block(static_cast<std::size_t>(n), -2);
  auto place = [&](Vertex v, int b) {
    if (!g.contains(v)) {
      throw Error(ErrorCode::MalformedCertificate, "vertex " + std::to_string(v) + " out of range");
    }
    if (block[v] != -2) {
      throw Error(ErrorCode::MalformedCertificate,
                  "vertex " + std::to_string(v) + " appears twice in the partition");
    }
    block[v] = b;
  };
  for (Vertex v : c.W) place(v, -1);
  for (std::size_t j = 0; j < c.Y.size(); ++j) {
    if (c.Y[j].empty()) throw Error(ErrorCode::MalformedCertificate, "empty Y block");
    for (Vertex v : c.Y[j]) place(v, static_cast<int>(j));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (block[v] == -2) {
      throw Error(ErrorCode::MalformedCertificate,
                  "vertex " + std::to_string(v) + " missing from the partition");
    }
  }
  if (c.X.size() != c.Y.size()) {
    throw Error(ErrorCode::MalformedCertificate, "X and Y have different lengths");
  }
  for (std::size_t j = 0; j < c.X.size(); ++j) {
    for (Vertex v : c.X[j]) {
      if (!g.contains(v) || block[v] != static_cast<int>(j)) {
        throw Error(ErrorCode::MalformedCertificate, "X_j must be a subset of Y_j");
      }
    }
  }
  return block;
}

// Condition (c): no two groups connected in G - W once the edges inside
// each Y_j are deleted.
bool separates_groups(const SimpleGraph& g, const std::vector<int>& block,
                      const std::vector<std::uint64_t>& masks) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges()) {
    if (block[u] == -1 || block[v] == -1 || block[u] == block[v]) continue;
    parent[find(u)] = find(v);
  }
  std::vector<std::uint64_t> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (block[v] == -1) continue;
    std::uint64_t& m = seen[find(v)];
    m |= masks[v];
    if (std::popcount(m) >= 2) return false;
  }
  return true;
}

}  // namespace

bool verify_certificate(const SimpleGraph& g, const GroupedTerminals& groups,
                        const MaderCertificate& cert) {
  groups.check(g);
  const auto block = block_of(g, cert);
  const auto masks = groups.masks(g.order());
  if (cert.value() >= cert.k) return false;
  std::vector<char> in_x(static_cast<std::size_t>(g.order()), 0);
  for (const auto& x : cert.X)
    for (Vertex v : x) in_x[v] = 1;
  for (std::size_t j = 0; j < cert.Y.size(); ++j) {
    for (Vertex v : cert.Y[j]) {
      if (in_x[v]) continue;
      if (masks[v] != 0) return false;
      for (Vertex w : g.neighbors(v)) {
        if (block[w] != -1 && block[w] != static_cast<int>(j)) return false;
      }
    }
  }
  return separates_groups(g, block, masks);
}

std::optional<MaderCertificate> find_certificate(const SimpleGraph& g,
                                                 const GroupedTerminals& groups, int k,
                                                 std::uint64_t budget) {
  groups.check(g);
  if (k <= 0) return std::nullopt;
  const int n = g.order();
  const auto masks = groups.masks(n);
  std::uint64_t spent = 0;
  std::vector<int> block(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> rest;
  std::optional<MaderCertificate> found;

  auto evaluate = [&](int w_size, int blocks) {
    if (++spent > budget) throw Error(ErrorCode::BudgetExceeded, "certificate search budget exhausted");
    // Forced X_j: terminals plus vertices with a neighbor in another block.
    std::vector<int> x_size(static_cast<std::size_t>(blocks), 0);
    for (Vertex v : rest) {
      bool forced = masks[v] != 0;
      for (Vertex w : g.neighbors(v)) {
        if (block[w] != -1 && block[w] != block[v]) forced = true;
      }
      if (forced) x_size[block[v]]++;
    }
    int value = w_size;
    for (int s : x_size) value += s / 2;
    if (value >= k || !separates_groups(g, block, masks)) return false;
    MaderCertificate c;
    c.k = k;
    c.Y.assign(static_cast<std::size_t>(blocks), {});
    c.X.assign(static_cast<std::size_t>(blocks), {});
    for (Vertex v = 0; v < n; ++v) {
      if (block[v] == -1) {
        c.W.push_back(v);
        continue;
      }
      c.Y[block[v]].push_back(v);
      bool forced = masks[v] != 0;
      for (Vertex w : g.neighbors(v)) {
        if (block[w] != -1 && block[w] != block[v]) forced = true;
      }
      if (forced) c.X[block[v]].push_back(v);
    }
    found = std::move(c);
    return true;
  };

  // Restricted growth strings over `rest`.
  auto partitions = [&](auto&& self, std::size_t i, int blocks, int w_size) -> bool {
    if (i == rest.size()) return evaluate(w_size, blocks);
    for (int b = 0; b <= blocks; ++b) {
      block[rest[i]] = b;
      if (self(self, i + 1, std::max(blocks, b + 1), w_size)) return true;
    }
    block[rest[i]] = -1;
    return false;
  };

  std::vector<char> in_w(static_cast<std::size_t>(n), 0);
  auto choose_w = [&](auto&& self, Vertex from, int left, int w_size) -> bool {
    if (left == 0) {
      rest.clear();
      for (Vertex v = 0; v < n; ++v) {
        block[v] = -1;
        if (!in_w[v]) rest.push_back(v);
      }
      return partitions(partitions, 0, 0, w_size);
    }
    for (Vertex v = from; v < n; ++v) {
      in_w[v] = 1;
      if (self(self, v + 1, left - 1, w_size)) return true;
      in_w[v] = 0;
    }
    return false;
  };

  for (int w = 0; w < k && w <= n; ++w) {
    if (choose_w(choose_w, 0, w, w)) return found;
  }
  return std::nullopt;
}

bool dichotomy_check(const SimpleGraph& g, const GroupedTerminals& groups, int k,
                     std::uint64_t budget) {
  GoodPaths gp = max_good_paths(g, groups, budget, std::max(k, 0));
  if (!gp.complete) throw Error(ErrorCode::Inconclusive, "good-path search ran out of budget");
  bool paths = gp.count >= k;
  std::optional<MaderCertificate> cert;
  try {
    cert = find_certificate(g, groups, k, budget);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BudgetExceeded) {
      throw Error(ErrorCode::Inconclusive, "certificate search ran out of budget");
    }
    throw;
  }
  return paths != cert.has_value();
}

}  // namespace hlink
