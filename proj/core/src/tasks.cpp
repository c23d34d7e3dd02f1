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

#include "graphbench/tasks.hpp"

#include <string>

#include "graphbench/error.hpp"
#include "text_util.hpp"

namespace graphbench {

std::string_view task_name(TaskKind task) {
  switch (task) {
    case TaskKind::kBfsOrder: return "bfs-order";
    case TaskKind::kConnectivity: return "connectivity";
    case TaskKind::kCycle: return "cycle";
    case TaskKind::kDiameter: return "diameter";
    case TaskKind::kShortestPath: return "shortest-path";
    case TaskKind::kTriangle: return "triangle";
    case TaskKind::kHamiltonian: return "hamiltonian";
    case TaskKind::kMaxCut: return "max-cut";
  }
  return "unknown";
}

TaskKind parse_task(std::string_view name) {
  const std::string key = detail::normalize_key(name);
  for (TaskKind t : kAllTasks) {
    if (key == task_name(t)) return t;
  }
  if (key == "bfs" || key == "bfsorder") return TaskKind::kBfsOrder;
  if (key == "shortestpath") return TaskKind::kShortestPath;
  if (key == "maxcut") return TaskKind::kMaxCut;
  if (key == "triangles") return TaskKind::kTriangle;
  throw Error(ErrorCode::kInvalidArgument, "unknown task '" + std::string(name) + "'");
}

bool task_needs_start(TaskKind task) { return task == TaskKind::kBfsOrder; }

bool task_needs_pair(TaskKind task) {
  return task == TaskKind::kConnectivity || task == TaskKind::kShortestPath;
}

namespace {

void require_params(TaskKind task, const TaskParams& params) {
  if (task_needs_start(task) && !params.start) {
    throw Error(ErrorCode::kMissingParam, std::string(task_name(task)) + " needs a start node");
  }
  if (task_needs_pair(task) && (!params.source || !params.target)) {
    throw Error(ErrorCode::kMissingParam,
                std::string(task_name(task)) + " needs a source and target node");
  }
}

}  // namespace

GroundTruth solve(TaskKind task, const Graph& g, const TaskParams& params,
                  const SolverLimits& limits) {
  require_params(task, params);
  switch (task) {
    case TaskKind::kBfsOrder:
      if (!g.contains(*params.start)) {
        throw Error(ErrorCode::kNodeOutOfRange, "start node out of range");
      }
      return StartNode{*params.start};
    case TaskKind::kConnectivity:
      return connected(g, *params.source, *params.target);
    case TaskKind::kCycle:
      return has_cycle(g);
    case TaskKind::kDiameter:
      return Length{diameter(g)};
    case TaskKind::kShortestPath: {
      auto d = shortest_distance(g, *params.source, *params.target);
      if (!d) {
        throw Error(ErrorCode::kDisconnectedGraph, "shortest-path endpoints are not connected");
      }
      return PathQuery{*params.source, *params.target, *d};
    }
    case TaskKind::kTriangle:
      return Count{triangle_count(g)};
    case TaskKind::kHamiltonian:
      return hamiltonian_cycle(g, limits).has_value();
    case TaskKind::kMaxCut: {
      Cut cut = max_cut(g, limits);
      return CutValue{cut.size, std::move(cut.side)};
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown task");
}

bool ground_truth_holds(TaskKind task, const Graph& g, const TaskParams& params,
                        const GroundTruth& truth, const SolverLimits& limits) {
  const GroundTruth expected = solve(task, g, params, limits);
  if (task != TaskKind::kMaxCut) return expected == truth;
  const auto* claimed = std::get_if<CutValue>(&truth);
  if (claimed == nullptr) return false;
  const auto& best = std::get<CutValue>(expected);
  return claimed->size == best.size && claimed->side.size() == g.node_count() &&
         verify_cut(g, claimed->side) == best.size;
}

}  // namespace graphbench
