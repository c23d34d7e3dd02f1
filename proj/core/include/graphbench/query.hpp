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

#pragma once

#include <cstdint>
#include <string>

#include "graphbench/generators.hpp"
#include "graphbench/graph.hpp"
#include "graphbench/tasks.hpp"

namespace graphbench {

// One benchmark item. `truth` is what solve(task, graph, params) returns;
// `seed` is the per-item stream the graph and params were drawn from.
struct QuerySpec {
  std::string id;
  TaskKind task = TaskKind::kCycle;
  Difficulty difficulty = Difficulty::kEasy;
  GraphFamily family = GraphFamily::kERM;
  Graph graph;
  TaskParams params;
  GroundTruth truth;
  std::uint64_t seed = 0;
};

}  // namespace graphbench
