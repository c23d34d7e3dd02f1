// Copyright 2026 The graphbench Authors
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

// Text renderings of a Graph and their parsers.
//
// Output is canonical: nodes ascending, adjacency lists ascending, edges
// lexicographic with u < v. None of the renderings end with a newline.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "graphbench/graph.hpp"

namespace graphbench {

enum class SerializationFormat {
  kAdjacencyMatrix,
  kAdjacencyList,
  kAdjacencySet,
  kEdgeList,
  kEdgeSet,
  kGMoL,
  kGMaL,
};

inline constexpr std::array<SerializationFormat, 7> kAllFormats = {
    SerializationFormat::kAdjacencyMatrix, SerializationFormat::kAdjacencyList,
    SerializationFormat::kAdjacencySet,    SerializationFormat::kEdgeList,
    SerializationFormat::kEdgeSet,         SerializationFormat::kGMoL,
    SerializationFormat::kGMaL,
};

// Flag/JSONL value: "adjacency-matrix", ..., "gmol", "gmal".
std::string_view format_id(SerializationFormat fmt);
// Human name used inside prompts: "Adjacency Matrix", ..., "GMoL", "GMaL".
std::string_view format_display_name(SerializationFormat fmt);
// Accepts either spelling, case-insensitive; also "AM", "AL", "AS", "EL", "ES".
SerializationFormat parse_format(std::string_view name);

struct SerializeOptions {
  // Emit <graphml> with the graphml.graphdrawing.org namespace instead of
  // the <GMaL> skeleton.
  bool strict_graphml = false;
};

std::string serialize(const Graph& g, SerializationFormat fmt, const SerializeOptions& options = {});

// Inverse of serialize(). Edge List and Edge Set do not record isolated
// nodes; pass `node_count` to restore them, otherwise n = max id + 1.
// Throws Error(kMalformedInput) with the byte offset of the problem.
Graph parse(std::string_view text, SerializationFormat fmt,
            std::optional<std::size_t> node_count = std::nullopt);

}  // namespace graphbench
