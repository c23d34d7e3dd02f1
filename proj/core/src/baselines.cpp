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


#include "graphbench/baselines.hpp"

#include <algorithm>
#include <random>

#include "graphbench/error.hpp"

namespace graphbench {
namespace {

std::size_t choose3(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

// Largest guess for numeric tasks; 0 for tasks without a numeric policy.
std::size_t guess_max(const QuerySpec& q, const BaselineConfig& config) {
  if (q.task == TaskKind::kDiameter) return q.graph.node_count();
  if (q.task == TaskKind::kTriangle) return triangle_guess_max(q.graph.node_count(), q.difficulty, config);
  return 0;
}

std::int64_t numeric_truth(const QuerySpec& q) {
  if (q.task == TaskKind::kDiameter) return std::get<Length>(q.truth).value;
  return static_cast<std::int64_t>(std::get<Count>(q.truth).value);
}

bool yes_no_task(TaskKind task) {
  return task == TaskKind::kCycle || task == TaskKind::kConnectivity || task == TaskKind::kHamiltonian;
}

bool numeric_task(TaskKind task) { return task == TaskKind::kDiameter || task == TaskKind::kTriangle; }

double analytic_one(const QuerySpec& q, const BaselineConfig& config) {
  if (yes_no_task(q.task)) return std::get<bool>(q.truth) ? 1.0 : 0.0;
  if (numeric_task(q.task)) {
    const std::size_t m = guess_max(q, config);
    const std::int64_t truth = numeric_truth(q);
    if (m == 0 || truth < 1 || truth > static_cast<std::int64_t>(m)) return 0.0;
    return 1.0 / static_cast<double>(m);
  }
  return 0.0;
}

}  // namespace

std::size_t triangle_guess_max(std::size_t n, Difficulty split, const BaselineConfig& config) {
  return std::min(choose3(n), config.triangle_caps[static_cast<std::size_t>(split)]);
}

double random_baseline(const std::vector<QuerySpec>& corpus, BaselineMode mode,
                       const BaselineConfig& config) {
  if (corpus.empty()) throw Error(ErrorCode::kInvalidArgument, "baseline needs a non-empty corpus");
  const TaskKind task = corpus.front().task;
  for (const QuerySpec& q : corpus) {
    if (q.task != task) throw Error(ErrorCode::kMixedTasks, "baseline corpus mixes several tasks");
  }

  if (mode == BaselineMode::kAnalytic) {
    double total = 0.0;
    for (const QuerySpec& q : corpus) total += analytic_one(q, config);
    return total / static_cast<double>(corpus.size());
  }

  if (config.trials == 0) throw Error(ErrorCode::kInvalidArgument, "monte-carlo needs trials >= 1");
  Rng rng(config.seed);
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
  std::size_t hits = 0;
  for (std::size_t t = 0; t < config.trials; ++t) {
    const QuerySpec& q = corpus[pick(rng)];
    if (yes_no_task(task)) {
      hits += std::get<bool>(q.truth) ? 1 : 0;
    } else if (numeric_task(task)) {
      const std::size_t m = guess_max(q, config);
      if (m == 0) continue;
      const auto guess = static_cast<std::int64_t>(std::uniform_int_distribution<std::size_t>(1, m)(rng));
      hits += guess == numeric_truth(q) ? 1 : 0;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(config.trials);
}

}  // namespace graphbench
