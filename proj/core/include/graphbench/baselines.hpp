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


// Random-guess baselines per task.
//
// Policies: yes/no tasks always answer "yes"; diameter guesses uniformly in
// [1, n]; triangle guesses uniformly in [1, M] with M = min(C(n,3), cap of
// the split); BFS order, shortest path and max-cut give no answer.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "graphbench/generators.hpp"
#include "graphbench/query.hpp"

namespace graphbench {

enum class BaselineMode { kAnalytic, kMonteCarlo };

struct BaselineConfig {
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  // Triangle guess caps for Easy, Medium, Hard.
  std::array<std::size_t, 3> triangle_caps = {50, 120, 300};
};

// M for one triangle query.
std::size_t triangle_guess_max(std::size_t n, Difficulty split, const BaselineConfig& config = {});

// Expected accuracy of the task's random policy over `corpus`. Throws
// Error(kMixedTasks) when the corpus spans several tasks and
// Error(kInvalidArgument) when it is empty.
double random_baseline(const std::vector<QuerySpec>& corpus, BaselineMode mode,
                       const BaselineConfig& config = {});

}  // namespace graphbench
