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


#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "graphbench/error.hpp"
#include "graphbench/rl_opt.hpp"

namespace gb = graphbench;
namespace fs = std::filesystem;

namespace {

gb::FactorSpace small_space() {
  return gb::FactorSpace({{"a", {"a0", "a1", "a2"}}, {"b", {"b0", "b1", "b2", "b3", "b4"}}, {"c", {"c0", "c1"}}});
}

// Additive landscape with a single best cell.
std::vector<double> planted(const gb::FactorSpace& space, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 0.15);
  std::vector<std::vector<double>> effect;
  for (const auto& d : space.dims()) {
    effect.emplace_back();
    for (std::size_t i = 0; i < d.actions.size(); ++i) effect.back().push_back(u(rng));
  }
  std::vector<double> table(space.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto c = space.at(i);
    for (std::size_t d = 0; d < c.size(); ++d) table[i] += effect[d][c[d]];
  }
  const auto best = std::max_element(table.begin(), table.end()) - table.begin();
  table[best] = 1.0;
  return table;
}

gb::DqnConfig dqn(std::size_t episodes, std::uint64_t seed = 0) {
  gb::DqnConfig c;
  c.episodes = episodes;
  c.seed = seed;
  return c;
}

gb::RewardFn lookup(const gb::FactorSpace& space, const std::vector<double>& table) {
  return [&space, &table](const gb::Combination& c) { return table[space.index_of(c)]; };
}

}  // namespace

TEST(FactorSpace, MixedRadixRoundTrip) {
  auto s = small_space();
  EXPECT_EQ(s.size(), 30u);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s.index_of(s.at(i)), i);
  EXPECT_EQ(s.index_of({1, 0, 0}), 10u);
  EXPECT_EQ(s.describe({2, 4, 1}), "a2|b4|c1");
}

TEST(FactorSpace, BuiltInSpaces) {
  EXPECT_EQ(gb::FactorSpace::standard({"m1", "m2"}).size(), 9u * 7u * 2u);
  const std::size_t sizes[] = {10, 100, 300, 1200, 8400, 75600};
  for (std::size_t f = 1; f <= 6; ++f) EXPECT_EQ(gb::FactorSpace::decoration_scale(f).size(), sizes[f - 1]);
  EXPECT_THROW(gb::FactorSpace::decoration_scale(0), gb::Error);
  EXPECT_THROW(gb::FactorSpace::decoration_scale(7), gb::Error);
}

TEST(FactorSpace, EmptyFactorRejected) {
  for (auto dims : {std::vector<gb::FactorDimension>{}, std::vector<gb::FactorDimension>{{"x", {}}}}) {
    try {
      gb::FactorSpace s(dims);
      FAIL();
    } catch (const gb::Error& e) {
      EXPECT_EQ(e.code(), gb::ErrorCode::kEmptyFactor);
    }
  }
}

TEST(FactorSpace, FromJsonAndRewardTable) {
  auto dir = fs::temp_directory_path() / ("graphbench-rl-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  {
    std::ofstream(dir / "f.json") << R"({"dims":[{"name":"p","actions":["x","y"]},{"name":"q","actions":["u","v","w"]}]})";
    std::ofstream t(dir / "t.csv");
    t << "p,q,reward\n";
    for (const char* p : {"x", "y"})
      for (const char* q : {"u", "v", "w"}) t << p << ',' << q << ',' << (p[0] == 'y' && q[0] == 'w' ? 0.9 : 0.1) << '\n';
  }
  auto s = gb::FactorSpace::from_json_file(dir / "f.json");
  ASSERT_EQ(s.size(), 6u);
  auto table = gb::load_reward_table(dir / "t.csv", s);
  EXPECT_DOUBLE_EQ(table[s.index_of({1, 2})], 0.9);
  EXPECT_DOUBLE_EQ(table[0], 0.1);
  std::ofstream(dir / "short.csv") << "p,q,reward\nx,u,0.5\n";
  EXPECT_THROW(gb::load_reward_table(dir / "short.csv", s), gb::Error);
  fs::remove_all(dir);
}

TEST(CostRate, Values) {
  gb::SearchResult r;
  r.explored = 79;
  r.space_size = 315;
  r.best_reward = 0.5;
  auto cr = gb::cost_rate(r, 0.5);
  EXPECT_NEAR(cr.cost, 0.2508, 1e-4);
  EXPECT_DOUBLE_EQ(cr.rate, 1.0);
  for (double bad : {0.0, -1.0}) {
    try {
      gb::cost_rate(r, bad);
      FAIL();
    } catch (const gb::Error& e) {
      EXPECT_EQ(e.code(), gb::ErrorCode::kZeroDenominator);
    }
  }
  r.space_size = 0;
  EXPECT_THROW(gb::cost_rate(r, 1.0), gb::Error);
}

TEST(GridSearch, VisitsEverything) {
  auto s = small_space();
  auto table = planted(s, 2);
  auto g = gb::grid_search(s, lookup(s, table));
  EXPECT_EQ(g.explored, s.size());
  EXPECT_DOUBLE_EQ(g.best_reward, 1.0);
  EXPECT_DOUBLE_EQ(gb::cost_rate(g, 1.0).cost, 1.0);
  auto d = gb::run_dqn({}, s, lookup(s, table), dqn(20, 4));
  EXPECT_GE(g.best_reward, d.best_reward);
}

TEST(Dqn, SingleCombination) {
  gb::FactorSpace s(std::vector<gb::FactorDimension>{{"only", {"x"}}});
  auto r = gb::run_dqn({}, s, [](const gb::Combination&) { return 0.3; }, dqn(5));
  EXPECT_EQ(r.explored, 1u);
  EXPECT_EQ(r.best, gb::Combination{0});
  EXPECT_DOUBLE_EQ(gb::cost_rate(r, 0.3).cost, 1.0);
}

TEST(Dqn, GreedyFollowsFittedValues) {
  auto s = small_space();
  auto table = planted(s, 9);
  const auto argmax = std::max_element(table.begin(), table.end()) - table.begin();
  gb::DqnConfig cfg;
  cfg.episodes = 10;
  cfg.epsilon_start = 0.0;
  cfg.epsilon_min = 0.0;
  cfg.initial_values = lookup(s, table);
  auto r = gb::run_dqn({}, s, lookup(s, table), cfg);
  EXPECT_EQ(s.index_of(r.best), static_cast<std::size_t>(argmax));
  EXPECT_EQ(s.index_of(r.log.front().combination), static_cast<std::size_t>(argmax));
}

TEST(Dqn, ReplayIsDeterministic) {
  auto s = small_space();
  auto table = planted(s, 3);
  gb::DqnConfig cfg;
  cfg.episodes = 25;
  cfg.seed = 77;
  auto a = gb::run_dqn({gb::TaskKind::kCycle, gb::Difficulty::kHard}, s, lookup(s, table), cfg);
  auto b = gb::run_dqn({gb::TaskKind::kCycle, gb::Difficulty::kHard}, s, lookup(s, table), cfg);
  ASSERT_EQ(a.log.size(), b.log.size());
  for (std::size_t i = 0; i < a.log.size(); ++i) {
    EXPECT_EQ(a.log[i].combination, b.log[i].combination);
    EXPECT_EQ(a.log[i].epsilon, b.log[i].epsilon);
  }
}

TEST(Dqn, LogBookkeeping) {
  auto s = small_space();
  auto table = planted(s, 5);
  std::size_t calls = 0;
  auto counted = [&](const gb::Combination& c) {
    ++calls;
    return table[s.index_of(c)];
  };
  auto r = gb::run_dqn({}, s, counted, dqn(40, 1));
  EXPECT_EQ(r.log.size(), 40u);
  EXPECT_EQ(calls, r.explored);  // rewards are memoized
  std::size_t fresh = 0;
  double best = -1;
  for (const auto& e : r.log) {
    fresh += e.fresh;
    best = std::max(best, e.reward);
    EXPECT_DOUBLE_EQ(e.best_reward, best);
    EXPECT_GE(e.epsilon, 0.01 - 1e-12);
  }
  EXPECT_EQ(fresh, r.explored);
  EXPECT_DOUBLE_EQ(r.best_reward, best);
  EXPECT_NEAR(r.log[1].epsilon, 0.95 * r.log[0].epsilon, 1e-12);
}

TEST(Dqn, LinearScheduleReachesFloor) {
  auto s = small_space();
  auto table = planted(s, 5);
  gb::DqnConfig cfg;
  cfg.episodes = 11;
  cfg.schedule = gb::EpsilonSchedule::kLinear;
  auto r = gb::run_dqn({}, s, lookup(s, table), cfg);
  EXPECT_DOUBLE_EQ(r.log.front().epsilon, 1.0);
  EXPECT_NEAR(r.log.back().epsilon, 0.01, 1e-9);
}
