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

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "graphbench/algorithms.hpp"
#include "graphbench/graph.hpp"

namespace graphbench {

enum class TaskKind {
  kBfsOrder,
  kConnectivity,
  kCycle,
  kDiameter,
  kShortestPath,
  kTriangle,
  kHamiltonian,
  kMaxCut,
};

inline constexpr std::array<TaskKind, 8> kAllTasks = {
    TaskKind::kBfsOrder,     TaskKind::kConnectivity, TaskKind::kCycle,
    TaskKind::kDiameter,     TaskKind::kShortestPath, TaskKind::kTriangle,
    TaskKind::kHamiltonian,  TaskKind::kMaxCut,
};

// "bfs-order", "connectivity", "cycle", "diameter", "shortest-path",
// "triangle", "hamiltonian", "max-cut".
std::string_view task_name(TaskKind task);
// Case-insensitive; '_' and '-' are interchangeable. Throws
// Error(kInvalidArgument) for unknown names.
TaskKind parse_task(std::string_view name);

bool task_needs_start(TaskKind task);
bool task_needs_pair(TaskKind task);

struct TaskParams {
  std::optional<Node> start;
  std::optional<Node> source;
  std::optional<Node> target;

  friend bool operator==(const TaskParams&, const TaskParams&) = default;
};

struct Count {
  std::size_t value = 0;
  friend bool operator==(const Count&, const Count&) = default;
};
struct Length {
  int value = 0;
  friend bool operator==(const Length&, const Length&) = default;
};
struct PathQuery {
  Node source = 0;
  Node target = 0;
  int distance = 0;
  friend bool operator==(const PathQuery&, const PathQuery&) = default;
};
struct StartNode {
  Node start = 0;
  friend bool operator==(const StartNode&, const StartNode&) = default;
};
struct CutValue {
  std::size_t size = 0;
  std::vector<bool> side;
  friend bool operator==(const CutValue&, const CutValue&) = default;
};

// bool: connectivity, cycle, hamiltonian existence. Count: triangles.
// Length: diameter. PathQuery: shortest path. StartNode: BFS order.
// CutValue: max-cut size plus one optimal partition.
using GroundTruth = std::variant<bool, Count, Length, PathQuery, StartNode, CutValue>;

// Runs the task's oracle. Throws Error(kMissingParam) when the task needs a
// start node or node pair that `params` lacks, and propagates oracle errors
// (kDisconnectedGraph, kTooLarge, kNodeOutOfRange).
GroundTruth solve(TaskKind task, const Graph& g, const TaskParams& params,
                  const SolverLimits& limits = {});

// True when `truth` is what the oracle would report. Max-cut accepts any
// optimal partition, not only the one solve() returns.
bool ground_truth_holds(TaskKind task, const Graph& g, const TaskParams& params,
                        const GroundTruth& truth, const SolverLimits& limits = {});

}  // namespace graphbench
