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
#include <string>
#include <string_view>

#include "hlink/graph.hpp"

namespace hlink {

// Graph text format:
//
//   # comment
//   n=<count>
//   u v
//   ...
//
// Vertex ids are 0-indexed; `#` starts a comment anywhere on a line. The
// JSON mirror is {"n": int, "edges": [[u, v], ...]}.

/// Parses either format (JSON when the first non-space byte is '{').
/// Throws ParseError (with line number) or RangeError.
SimpleGraph parse_graph(std::string_view text);
SimpleGraph parse_graph_text(std::string_view text);
SimpleGraph parse_graph_json(std::string_view text);

/// Canonical text: header, then edges u<v in lexicographic order.
std::string emit_graph(const SimpleGraph& g);
std::string emit_graph_json(const SimpleGraph& g);

SimpleGraph read_graph_file(const std::string& path);

/// Pattern from a name ("F(2,1,1)", "kite", "P4", "B3", "C4", "2K2", and the
/// long forms "bond(3)", "cycle(4)", "matching(2)", "path(4)") or from text in
/// the graph format with an `m=` or `n=` header where repeated lines are
/// parallel edges.
PatternMultigraph parse_pattern(std::string_view name_or_text);
PatternMultigraph read_pattern(const std::string& name_or_path);

/// FNV-1a 64 over the canonical text serialization, as 16 hex digits.
std::string graph_hash(const SimpleGraph& g);
inline constexpr std::string_view kGraphHashId = "fnv1a64(canonical-text)";
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

}  // namespace hlink
