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


// Sequential DQN search over prompt/format/model style factors, plus the
// exhaustive grid search it is measured against.
//
// An episode picks one action per factor dimension in order. Epoch t owns
// its own value network Q_t(s0, a_0..a_{t-1}, a_t); the last epoch regresses
// onto the observed reward and earlier ones onto max_a Q_{t+1}.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graphbench/generators.hpp"
#include "graphbench/tasks.hpp"

namespace graphbench {

struct FactorDimension {
  std::string name;
  std::vector<std::string> actions;
};

// Action indices, one per dimension.
using Combination = std::vector<std::size_t>;

class FactorSpace {
 public:
  FactorSpace() = default;
  // Throws Error(kEmptyFactor) when there are no dimensions or one is empty.
  explicit FactorSpace(std::vector<FactorDimension> dims);

  // prompt scheme (9) x serialization format (7) x models.
  static FactorSpace standard(const std::vector<std::string>& models);
  // The first `factors` (1..6) of: sentence separator, Q/A separator, word
  // separator, case, serialization format, prompt scheme.
  static FactorSpace decoration_scale(std::size_t factors);
  // {"dims": [{"name": ..., "actions": [...]}, ...]}
  static FactorSpace from_json_file(const std::filesystem::path& path);

  const std::vector<FactorDimension>& dims() const { return dims_; }
  std::size_t size() const;  // K
  // Mixed-radix index, first dimension most significant.
  std::size_t index_of(const Combination& c) const;
  Combination at(std::size_t index) const;
  std::string describe(const Combination& c) const;  // "a|b|c"

 private:
  std::vector<FactorDimension> dims_;
};

using RewardFn = std::function<double(const Combination&)>;

// Rewards for every combination, indexed by FactorSpace::index_of. CSV rows
// are the dimension action names followed by the reward; a header row
// naming the dimensions is required.
std::vector<double> load_reward_table(const std::filesystem::path& path, const FactorSpace& space);

struct SearchState {
  TaskKind task = TaskKind::kBfsOrder;
  Difficulty split = Difficulty::kEasy;
};

enum class EpsilonSchedule { kMultiplicative, kLinear };

struct DqnConfig {
  std::size_t episodes = 80;
  std::size_t hidden = 64;
  double learning_rate = 1e-3;
  double epsilon_start = 1.0;
  double epsilon_min = 0.01;
  double decay_rate = 0.95;  // multiplicative schedule only
  EpsilonSchedule schedule = EpsilonSchedule::kMultiplicative;
  std::uint64_t seed = 0;
  // Known per-combination values to fit the networks to before searching.
  RewardFn initial_values;
};

struct EpisodeLog {
  std::size_t episode = 0;
  Combination combination;
  double reward = 0.0;
  double epsilon = 0.0;
  bool fresh = false;  // first visit of this combination
  std::size_t explored = 0;
  double best_reward = 0.0;
};

struct SearchResult {
  Combination best;
  double best_reward = 0.0;  // acc*
  std::size_t episodes = 0;
  std::size_t explored = 0;  // k
  std::size_t space_size = 0;  // K
  std::vector<EpisodeLog> log;
};

// reward_fn is called once per distinct combination.
SearchResult run_dqn(const SearchState& s0, const FactorSpace& space, const RewardFn& reward_fn,
                     const DqnConfig& config = {});

SearchResult grid_search(const FactorSpace& space, const RewardFn& reward_fn);

struct CostRate {
  double cost = 0.0;  // k / K
  double rate = 0.0;  // acc* / acc_max
};

// Throws Error(kZeroDenominator) when acc_max <= 0.
CostRate cost_rate(const SearchResult& result, double acc_max);

}  // namespace graphbench
