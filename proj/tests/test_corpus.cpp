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


#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "graphbench/algorithms.hpp"
#include "graphbench/corpus.hpp"
#include "graphbench/error.hpp"
#include "graphbench/serializers.hpp"
#include "oracles.hpp"

namespace gb = graphbench;
using T = gb::TaskKind;

namespace {

std::string jsonl(const std::vector<gb::QuerySpec>& items) {
  std::ostringstream os;
  gb::write_corpus(os, items);
  return os.str();
}

gb::CorpusConfig config(std::vector<T> tasks, std::vector<gb::Difficulty> splits, std::size_t count,
                        std::uint64_t seed) {
  gb::CorpusConfig c;
  c.tasks = std::move(tasks);
  c.splits = std::move(splits);
  c.count = count;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(Corpus, CellsAndIds) {
  auto items = gb::build_corpus(config({T::kConnectivity}, {gb::Difficulty::kEasy}, 3, 1));
  EXPECT_EQ(items.size(), 15u);  // five admissible families
  std::set<std::string> ids;
  for (const auto& q : items) {
    ids.insert(q.id);
    EXPECT_NE(q.family, gb::GraphFamily::kBAG);
    EXPECT_TRUE(gb::is_admissible(q.task, q.family));
    EXPECT_NE(*q.params.source, *q.params.target);
  }
  EXPECT_EQ(ids.size(), items.size());
  EXPECT_EQ(items.front().id, "connectivity-easy-ERM-00000");
}

TEST(Corpus, TotalCountSpreadsOverFamilies) {
  auto c = config({T::kCycle}, {gb::Difficulty::kEasy}, 10, 7);
  c.count_is_total = true;
  auto items = gb::build_corpus(c);
  EXPECT_EQ(items.size(), 10u);
  std::set<gb::GraphFamily> fams;
  for (const auto& q : items) fams.insert(q.family);
  EXPECT_EQ(fams.size(), 6u);
}

TEST(Corpus, Deterministic) {
  auto c = config({T::kBfsOrder, T::kTriangle}, {gb::Difficulty::kEasy, gb::Difficulty::kMedium}, 4, 99);
  EXPECT_EQ(jsonl(gb::build_corpus(c)), jsonl(gb::build_corpus(c)));
  c.seed = 100;
  auto other = jsonl(gb::build_corpus(c));
  c.seed = 99;
  EXPECT_NE(jsonl(gb::build_corpus(c)), other);
}

TEST(Corpus, NoRepeatedEdgeSetsWithinCell) {
  auto items = gb::build_corpus(config({T::kCycle}, {gb::Difficulty::kEasy}, 40, 3));
  std::set<std::string> keys;
  for (const auto& q : items) {
    EXPECT_TRUE(keys.insert(std::string(gb::family_name(q.family)) + q.graph.canonical_key()).second) << q.id;
  }
}

TEST(Corpus, TaskPreconditionsHold) {
  auto items = gb::build_corpus(config({T::kDiameter, T::kShortestPath, T::kHamiltonian}, {gb::Difficulty::kEasy}, 6, 4));
  std::size_t ham_yes = 0, ham = 0;
  for (const auto& q : items) {
    EXPECT_TRUE(gb::ground_truth_holds(q.task, q.graph, q.params, q.truth));
    if (q.task == T::kDiameter) {
      EXPECT_TRUE(oracle::all_connected(q.graph));
    }
    if (q.task == T::kShortestPath) {
      EXPECT_TRUE(oracle::connected(q.graph, *q.params.source, *q.params.target));
    }
    if (q.task == T::kHamiltonian) {
      ++ham;
      ham_yes += std::get<bool>(q.truth);
      EXPECT_EQ(std::get<bool>(q.truth), oracle::hamiltonian(q.graph));
    }
  }
  EXPECT_EQ(2 * ham_yes, ham);
}

TEST(Corpus, HardNpTasksStayWithinSolverLimit) {
  auto range = gb::task_node_range(T::kMaxCut, gb::Difficulty::kHard);
  EXPECT_EQ(range.min, 21u);
  EXPECT_EQ(range.max, 25u);
  EXPECT_EQ(gb::task_node_range(T::kTriangle, gb::Difficulty::kHard).max, 30u);
}

TEST(Jsonl, RoundTrip) {
  auto items = gb::build_corpus(config({gb::kAllTasks.begin(), gb::kAllTasks.end()}, {gb::Difficulty::kEasy}, 1, 5));
  for (const auto& q : items) {
    const auto line = gb::to_jsonl(q);
    const auto back = gb::query_from_jsonl(line);
    EXPECT_EQ(back.id, q.id);
    EXPECT_EQ(back.graph, q.graph);
    EXPECT_EQ(back.params, q.params);
    EXPECT_EQ(back.truth, q.truth);
    EXPECT_EQ(gb::to_jsonl(back), line);
  }
}

TEST(Jsonl, FieldOrder) {
  auto items = gb::build_corpus(config({T::kShortestPath}, {gb::Difficulty::kEasy}, 1, 5));
  const auto line = gb::to_jsonl(items.front());
  std::size_t last = 0;
  for (const char* key : {"\"id\"", "\"task\"", "\"difficulty\"", "\"graph_type\"", "\"n\"", "\"edges\"", "\"params\"",
                          "\"ground_truth\"", "\"seed\""}) {
    const auto pos = line.find(key);
    ASSERT_NE(pos, std::string::npos) << key;
    EXPECT_GE(pos, last) << key;
    last = pos;
  }
}

TEST(Jsonl, RejectsBadLines) {
  EXPECT_THROW(gb::query_from_jsonl("{"), gb::Error);
  EXPECT_THROW(gb::query_from_jsonl(R"({"id":"x"})"), gb::Error);
}

TEST(SelfCheck, CleanCorpusPasses) {
  std::istringstream in(jsonl(gb::build_corpus(config({T::kCycle, T::kMaxCut}, {gb::Difficulty::kEasy}, 3, 8))));
  EXPECT_TRUE(gb::selfcheck(in).empty());
}

TEST(SelfCheck, FlagsEditedGroundTruth) {
  auto items = gb::build_corpus(config({T::kTriangle}, {gb::Difficulty::kEasy}, 2, 8));
  auto text = jsonl(items);
  const std::string needle = "\"ground_truth\":";
  auto pos = text.find(needle, text.find('\n') + 1) + needle.size();
  auto end = text.find(',', pos);
  text.replace(pos, end - pos, "9999");
  std::istringstream in(text);
  auto issues = gb::selfcheck(in);
  ASSERT_FALSE(issues.empty());
  EXPECT_EQ(issues.front().id, items[1].id);
  EXPECT_EQ(issues.front().line, 2u);
}

TEST(SelfCheck, FlagsDuplicateIds) {
  auto items = gb::build_corpus(config({T::kCycle}, {gb::Difficulty::kEasy}, 1, 8));
  std::istringstream in(gb::to_jsonl(items[0]) + "\n" + gb::to_jsonl(items[0]) + "\n");
  EXPECT_FALSE(gb::selfcheck(in).empty());
}

TEST(ImportEdgeList, CompactsIds) {
  auto g = gb::parse_edge_list_compact("# comment\n10 20\n20 30\n\n40 50\n50 60\n");
  EXPECT_EQ(g.node_count(), 6u);
  EXPECT_EQ(g, gb::Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}));
  EXPECT_EQ(gb::parse_edge_list_compact("").node_count(), 0u);
  EXPECT_THROW(gb::parse_edge_list_compact("1 x\n"), gb::Error);
  EXPECT_THROW(gb::parse_edge_list_compact("1 2 3\n"), gb::Error);
}

TEST(ImportEdgeList, RoundTripsThroughEdgeListRendering) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    auto g = oracle::random_graph(4 + i % 8, 0.5, rng);
    if (g.edge_count() == 0) continue;
    auto back = gb::parse_edge_list_compact(gb::serialize(g, gb::SerializationFormat::kEdgeList));
    // Isolated nodes vanish; compare on the non-isolated part.
    std::size_t covered = 0;
    for (int v = 0; v < static_cast<int>(g.node_count()); ++v) covered += g.degree(v) > 0;
    EXPECT_EQ(back.node_count(), covered);
    EXPECT_EQ(back.edge_count(), g.edge_count());
  }
}

TEST(Stats, BafForestAndErmBand) {
  auto items = gb::build_corpus(config({T::kBfsOrder}, {gb::Difficulty::kEasy}, 200, 9));
  for (const auto& c : gb::corpus_stats(items)) {
    if (c.family == gb::GraphFamily::kBAF) {
      EXPECT_LT(c.avg_edges, c.avg_nodes);
    }
    if (c.family == gb::GraphFamily::kERM) {
      // E[m | n] = (C(n,2) + 1) / 2 with n ~ U{5..10}: mean over n of (n(n-1)/2 + 1)/2.
      double expect = 0;
      for (int n = 5; n <= 10; ++n) expect += (n * (n - 1) / 2.0 + 1) / 2.0 / 6.0;
      EXPECT_NEAR(c.avg_edges, expect, 2.5);
    }
  }
  EXPECT_TRUE(gb::corpus_stats({}).empty());
}
