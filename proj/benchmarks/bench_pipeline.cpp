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


#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "graphbench/generators.hpp"
#include "graphbench/rl_opt.hpp"
#include "graphbench/serializers.hpp"

namespace gb = graphbench;

namespace {

void BM_Serialize(benchmark::State& state) {
  gb::Rng rng(4);
  const auto g = gb::erdos_renyi_p(30, 0.3, rng);
  const auto fmt = gb::kAllFormats[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(std::string(gb::format_id(fmt)));
  for (auto _ : state) benchmark::DoNotOptimize(gb::serialize(g, fmt));
}
BENCHMARK(BM_Serialize)->DenseRange(0, static_cast<int>(gb::kAllFormats.size()) - 1);

void BM_ParseRoundTrip(benchmark::State& state) {
  gb::Rng rng(5);
  const auto g = gb::erdos_renyi_p(30, 0.3, rng);
  const auto fmt = gb::kAllFormats[static_cast<std::size_t>(state.range(0))];
  const auto text = gb::serialize(g, fmt);
  state.SetLabel(std::string(gb::format_id(fmt)));
  for (auto _ : state) benchmark::DoNotOptimize(gb::parse(text, fmt, g.node_count()));
}
BENCHMARK(BM_ParseRoundTrip)->DenseRange(0, static_cast<int>(gb::kAllFormats.size()) - 1);

void BM_Dqn80(benchmark::State& state) {
  const auto space = gb::FactorSpace::standard({"a", "b", "c", "d", "e"});
  std::vector<double> table(space.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<double>((i * 37) % 101) / 200.0;
  table[123] = 1.0;
  const gb::RewardFn reward = [&](const gb::Combination& c) { return table[space.index_of(c)]; };
  std::uint64_t seed = 0;
  for (auto _ : state) {
    gb::DqnConfig cfg;
    cfg.seed = seed++;
    benchmark::DoNotOptimize(gb::run_dqn({}, space, reward, cfg).best_reward);
  }
}
BENCHMARK(BM_Dqn80)->Unit(benchmark::kMillisecond);

}  // namespace
