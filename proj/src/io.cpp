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

#include "hlink/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"

namespace hlink {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view token, long long& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

struct RawEdgeList {
  int n = -1;
  std::vector<Edge> edges;
  std::vector<int> lines;
};

// Shared by the graph and pattern readers; `header_keys` lists accepted
// header names ("n", "m").
RawEdgeList parse_edge_lines(std::string_view text,
                             std::initializer_list<std::string_view> header_keys) {
  RawEdgeList out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    if (out.n < 0) {
      auto eq = line.find('=');
      if (eq == std::string_view::npos) throw ParseError(line_no, "expected header like n=<count>");
      auto key = trim(line.substr(0, eq));
      if (std::find(header_keys.begin(), header_keys.end(), key) == header_keys.end()) {
        throw ParseError(line_no, "unknown header key '" + std::string(key) + "'");
      }
      long long n = 0;
      if (!parse_int(trim(line.substr(eq + 1)), n) || n < 0 || n > 1'000'000) {
        throw ParseError(line_no, "bad vertex count");
      }
      out.n = static_cast<int>(n);
      continue;
    }
    auto tokens = split_ws(line);
    long long u = 0, v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v)) {
      throw ParseError(line_no, "expected an edge 'u v'");
    }
    if (u < 0 || v < 0 || u >= out.n || v >= out.n) {
      throw Error(ErrorCode::RangeError, "line " + std::to_string(line_no) + ": edge " +
                                             std::to_string(u) + " " + std::to_string(v) +
                                             " outside 0.." + std::to_string(out.n - 1));
    }
    if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
    out.edges.emplace_back(static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v)));
    out.lines.push_back(line_no);
    if (nl == text.size()) break;
  }
  if (out.n < 0) throw ParseError(line_no, "missing header");
  return out;
}

}  // namespace

SimpleGraph parse_graph_text(std::string_view text) {
  auto raw = parse_edge_lines(text, {"n"});
  std::vector<Edge> seen = raw.edges;
  std::vector<std::size_t> order(seen.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return seen[a] < seen[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (seen[order[i]] == seen[order[i - 1]]) {
      throw ParseError(raw.lines[order[i]], "duplicate edge");
    }
  }
  return SimpleGraph(raw.n, raw.edges);
}

SimpleGraph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() ||
      !doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError(0, "expected {\"n\":int,\"edges\":[[u,v],...]}");
  }
  long long n = doc["n"].get<long long>();
  if (n < 0) throw ParseError(0, "negative vertex count");
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw ParseError(0, "edge must be [u, v]");
    }
    long long u = e[0].get<long long>(), v = e[1].get<long long>();
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::RangeError, "edge outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw ParseError(0, "loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v)));
  }
  try {
    return SimpleGraph(static_cast<int>(n), edges);
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

SimpleGraph parse_graph(std::string_view text) {
  auto t = trim(text);
  if (!t.empty() && t.front() == '{') return parse_graph_json(t);
  return parse_graph_text(text);
}

std::string emit_graph(const SimpleGraph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string emit_graph_json(const SimpleGraph& g) {
  nlohmann::json doc;
  doc["n"] = g.order();
  doc["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) doc["edges"].push_back({u, v});
  return doc.dump();
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

SimpleGraph read_graph_file(const std::string& path) { return parse_graph(slurp(path)); }

PatternMultigraph parse_pattern(std::string_view name_or_text) {
  std::string s(trim(name_or_text));
  std::smatch m;
  static const std::regex fat(R"(F_?\{?\(?\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)?\}?)");
  static const std::regex bond(R"((?:B|bond\()\s*(\d+)\)?)");
  static const std::regex cyc(R"((?:C|cycle\()\s*(\d+)\)?)");
  static const std::regex pth(R"((?:P|path\()\s*(\d+)\)?)");
  static const std::regex mat(R"((?:(\d+)K2|matching\(\s*(\d+)\s*\)))");
  if (std::regex_match(s, m, fat)) {
    return PatternMultigraph::fat_triangle(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]));
  }
  if (s == "kite" || s == "P4+" || s == "P4^+") return PatternMultigraph::kite();
  if (std::regex_match(s, m, bond)) return PatternMultigraph::bond(std::stoi(m[1]));
  if (std::regex_match(s, m, cyc)) return PatternMultigraph::cycle(std::stoi(m[1]));
  if (std::regex_match(s, m, pth)) return PatternMultigraph::path(std::stoi(m[1]));
  if (std::regex_match(s, m, mat)) {
    return PatternMultigraph::matching(std::stoi(m[1].matched ? m[1].str() : m[2].str()));
  }
  if (!s.empty() && s.front() == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(s);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    int order = doc.value("m", doc.value("n", -1));
    if (order < 0 || !doc.contains("edges")) throw ParseError(0, "expected {\"m\":int,\"edges\":...}");
    std::vector<PatternEdge> edges;
    for (const auto& e : doc["edges"]) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return PatternMultigraph(order, std::move(edges), doc.value("name", std::string("custom")));
  }
  if (s.find('=') == std::string::npos) {
    throw Error(ErrorCode::InvalidPattern, "unknown pattern name '" + s + "'");
  }
  auto raw = parse_edge_lines(name_or_text, {"m", "n"});
  std::vector<PatternEdge> edges;
  for (auto [u, v] : raw.edges) edges.push_back({u, v});
  return PatternMultigraph(raw.n, std::move(edges));
}

PatternMultigraph read_pattern(const std::string& name_or_path) {
  std::ifstream probe(name_or_path);
  if (probe.good()) return parse_pattern(slurp(name_or_path));
  return parse_pattern(name_or_path);
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string graph_hash(const SimpleGraph& g) {
  static const char* kHex = "0123456789abcdef";
  std::uint64_t h = fnv1a64(emit_graph(g));
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = kHex[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace hlink
