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

#include "graphbench/algorithms.hpp"
#include "graphbench/answers.hpp"
#include "graphbench/generators.hpp"

namespace gb = graphbench;

namespace {

gb::Graph erp(std::size_t n, std::uint64_t seed = 1) {
  gb::Rng rng(seed);
  return gb::erdos_renyi_p(n, 0.4, rng);
}

void BM_Triangles(benchmark::State& state) {
  const auto g = erp(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gb::triangle_count(g));
}
BENCHMARK(BM_Triangles)->Arg(10)->Arg(20)->Arg(30);

void BM_Diameter(benchmark::State& state) {
  gb::Rng rng(2);
  const auto g = gb::generate_connected(gb::GraphFamily::kERP, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(gb::diameter(g));
}
BENCHMARK(BM_Diameter)->Arg(10)->Arg(20)->Arg(30);

void BM_MaxCut(benchmark::State& state) {
  const auto g = erp(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gb::max_cut(g).size);
}
BENCHMARK(BM_MaxCut)->Arg(10)->Arg(16)->Arg(20)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_Hamiltonian(benchmark::State& state) {
  gb::Rng rng(3);
  const auto g = gb::erdos_renyi_p(static_cast<std::size_t>(state.range(0)), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(gb::hamiltonian_cycle(g).has_value());
}
BENCHMARK(BM_Hamiltonian)->Arg(10)->Arg(15)->Arg(20)->Arg(25)->Unit(benchmark::kMicrosecond);

void BM_VerifyBfs(benchmark::State& state) {
  const auto g = erp(static_cast<std::size_t>(state.range(0)));
  const auto order = gb::bfs_order(g, 0);
  for (auto _ : state) benchmark::DoNotOptimize(gb::verify_bfs_order(g, 0, order));
}
BENCHMARK(BM_VerifyBfs)->Arg(10)->Arg(30);

}  // namespace
