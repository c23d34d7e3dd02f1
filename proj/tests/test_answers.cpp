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


#include <numeric>

#include <gtest/gtest.h>

#include "graphbench/algorithms.hpp"
#include "graphbench/answers.hpp"
#include "graphbench/error.hpp"
#include "graphbench/prompts.hpp"
#include "oracles.hpp"

namespace gb = graphbench;
using T = gb::TaskKind;

namespace {

gb::QuerySpec query(T task, gb::Graph g, gb::TaskParams params = {}) {
  gb::QuerySpec q;
  q.task = task;
  q.graph = std::move(g);
  q.params = params;
  q.truth = gb::solve(task, q.graph, params);
  return q;
}

int grade(const gb::QuerySpec& q, const std::string& response) { return gb::score(q, gb::extract(q.task, response)); }

}  // namespace

TEST(Extract, Decisions) {
  EXPECT_EQ(gb::extract(T::kCycle, "Yes, there is a cycle in this graph."), gb::ExtractedAnswer(true));
  EXPECT_EQ(gb::extract(T::kCycle, "No, there is no cycle in this graph."), gb::ExtractedAnswer(false));
  EXPECT_EQ(gb::extract(T::kCycle, "The graph is acyclic."), gb::ExtractedAnswer(false));
  EXPECT_EQ(gb::extract(T::kConnectivity, "NO, THERE IS NO PATH between them"), gb::ExtractedAnswer(false));
  EXPECT_EQ(gb::extract(T::kConnectivity, "I am not sure."), gb::ExtractedAnswer(gb::NotFound{}));
}

TEST(Extract, StrongPhraseBeatsBareYes) {
  // "yes" in passing loses to the explicit key phrase.
  EXPECT_EQ(gb::extract(T::kCycle, "Yes, let me check. No, there is no cycle."), gb::ExtractedAnswer(false));
}

TEST(Extract, LastOccurrenceWinsOnContradiction) {
  EXPECT_EQ(gb::extract(T::kCycle, "Yes, there is a cycle. Wait: no, there is no cycle."),
            gb::ExtractedAnswer(false));
  EXPECT_EQ(gb::extract(T::kDiameter, "The diameter is 3. Correction: the diameter is 4."),
            gb::ExtractedAnswer(gb::Number{4}));
}

TEST(Extract, Numbers) {
  EXPECT_EQ(gb::extract(T::kDiameter, "So the diameter is 2.0"), gb::ExtractedAnswer(gb::Number{2}));
  EXPECT_EQ(gb::extract(T::kTriangle, "thus, the number of triangles in the graph is **4**."),
            gb::ExtractedAnswer(gb::Number{4}));
  EXPECT_EQ(gb::extract(T::kTriangle, "There are 5 triangles."), gb::ExtractedAnswer(gb::Number{5}));
  EXPECT_EQ(gb::extract(T::kTriangle, "The number of triangles is 8.67"), gb::ExtractedAnswer(gb::NotFound{}));
}

TEST(Extract, Sequences) {
  EXPECT_EQ(gb::extract(T::kBfsOrder, "the BFS traversal order starting from node 7 is:\n\n**A: 7, 0, 9**"),
            gb::ExtractedAnswer(gb::NodeSequence{{7, 0, 9}}));
  EXPECT_EQ(gb::extract(T::kShortestPath, "Thus, the shortest path from node 5 to node 8 is 5,0,8."),
            gb::ExtractedAnswer(gb::NodeSequence{{5, 0, 8}}));
  EXPECT_EQ(gb::extract(T::kShortestPath, "The shortest path is 1 -> 4 -> 2"),
            gb::ExtractedAnswer(gb::NodeSequence{{1, 4, 2}}));
}

TEST(Extract, CutAndCycleClaims) {
  auto cut = gb::extract(T::kMaxCut, "The maximum cut size is 4, with partition {0, 2} and {1, 3}.");
  EXPECT_EQ(cut, gb::ExtractedAnswer(gb::CutClaim{4, {0, 2}, {1, 3}}));
  EXPECT_EQ(gb::describe(cut), "4 {0,2}|{1,3}");
  auto tour = gb::extract(T::kHamiltonian,
                          "Yes, there is a Hamiltonian cycle in this graph. The Hamiltonian cycle is 0,1,2,3,0.");
  EXPECT_EQ(tour, gb::ExtractedAnswer(gb::CycleClaim{true, {0, 1, 2, 3, 0}}));
  EXPECT_EQ(gb::describe(gb::extract(T::kHamiltonian, "No, there is no Hamiltonian cycle in this graph.")), "no");
}

TEST(Extract, CustomPatternFile) {
  auto rules = gb::PatternSet::from_text("diameter 1 value answer=(\\d+)\n# comment\n");
  EXPECT_EQ(rules.size(), 1u);
  EXPECT_EQ(gb::extract(T::kDiameter, "answer=6", rules), gb::ExtractedAnswer(gb::Number{6}));
  EXPECT_THROW(gb::PatternSet::from_text("diameter one value x"), gb::Error);
  EXPECT_THROW(gb::PatternSet::from_text("diameter 1 value ("), gb::Error);
}

TEST(BfsVerifier, MatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 120; ++i) {
    auto g = oracle::random_graph(2 + i % 6, 0.35, rng);
    const int s = static_cast<int>(i % g.node_count());
    const auto valid = oracle::bfs_orders(g, s);
    // Every permutation of every prefix length that starts at s.
    std::vector<int> nodes(g.node_count());
    std::iota(nodes.begin(), nodes.end(), 0);
    std::sort(nodes.begin(), nodes.end());
    do {
      for (std::size_t len = 1; len <= nodes.size(); ++len) {
        std::vector<int> seq(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(len));
        if (seq.front() != s) continue;
        ASSERT_EQ(gb::verify_bfs_order(g, s, seq), valid.count(seq) == 1) << g.canonical_key();
      }
    } while (std::next_permutation(nodes.begin(), nodes.end()));
  }
}

TEST(BfsVerifier, RejectsMalformed) {
  auto g = gb::Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}});
  EXPECT_TRUE(gb::verify_bfs_order(g, 0, std::vector<int>{0, 2, 1, 3}));
  EXPECT_FALSE(gb::verify_bfs_order(g, 0, std::vector<int>{0, 1, 3, 2}));
  EXPECT_FALSE(gb::verify_bfs_order(g, 0, std::vector<int>{0, 1, 2, 3, 3}));
  EXPECT_FALSE(gb::verify_bfs_order(g, 0, std::vector<int>{0, 1, 2, 9}));
  EXPECT_FALSE(gb::verify_bfs_order(g, 0, std::vector<int>{}));
}

TEST(ShortestPathVerifier, Cases) {
  auto g = gb::Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 3}, {3, 2}, {2, 4}});
  EXPECT_TRUE(gb::verify_shortest_path(g, 0, 4, std::vector<int>{0, 1, 2, 4}));
  EXPECT_TRUE(gb::verify_shortest_path(g, 0, 4, std::vector<int>{0, 3, 2, 4}));
  EXPECT_FALSE(gb::verify_shortest_path(g, 0, 4, std::vector<int>{0, 1, 4}));
  EXPECT_FALSE(gb::verify_shortest_path(g, 0, 2, std::vector<int>{0, 1, 0, 1, 2}));
  EXPECT_FALSE(gb::verify_shortest_path(g, 0, 2, std::vector<int>{1, 2}));
}

TEST(ShortestPathVerifier, MatchesFloydWarshall) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 60; ++i) {
    auto g = oracle::random_graph(3 + i % 5, 0.4, rng);
    auto d = oracle::floyd_warshall(g);
    const int n = static_cast<int>(g.node_count());
    std::vector<int> nodes(n);
    std::iota(nodes.begin(), nodes.end(), 0);
    do {
      for (int len = 1; len <= n; ++len) {
        std::vector<int> seq(nodes.begin(), nodes.begin() + len);
        const int u = seq.front(), v = seq.back();
        bool walk = true;
        for (int k = 0; k + 1 < len; ++k) walk = walk && g.has_edge(seq[k], seq[k + 1]);
        const bool expected = walk && d[u][v] == len - 1;
        ASSERT_EQ(gb::verify_shortest_path(g, u, v, seq), expected);
      }
    } while (std::next_permutation(nodes.begin(), nodes.end()));
  }
}

TEST(Score, GoldAnswersScoreOne) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 80; ++i) {
    auto g = oracle::random_graph(5 + i % 5, 0.5, rng);
    if (!oracle::all_connected(g)) continue;
    std::vector<gb::QuerySpec> qs = {
        query(T::kBfsOrder, g, {.start = 1, .source = std::nullopt, .target = std::nullopt}),
        query(T::kConnectivity, g, {.start = std::nullopt, .source = 0, .target = 2}),
        query(T::kCycle, g),
        query(T::kDiameter, g),
        query(T::kShortestPath, g, {.start = std::nullopt, .source = 0, .target = 3}),
        query(T::kTriangle, g),
        query(T::kHamiltonian, g),
        query(T::kMaxCut, g),
    };
    for (const auto& q : qs) {
      for (auto style : gb::kAllAnswerStyles) {
        EXPECT_EQ(grade(q, gb::answer_text(q, style)), 1) << gb::task_name(q.task) << "\n" << gb::answer_text(q, style);
      }
    }
  }
}

TEST(Score, WrongAnswersScoreZero) {
  auto g = gb::Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(grade(query(T::kCycle, g), "No, there is no cycle."), 0);
  EXPECT_EQ(grade(query(T::kDiameter, g), "The diameter is 3."), 0);
  EXPECT_EQ(grade(query(T::kTriangle, g), "I cannot tell."), 0);
  // Max-cut needs both the size and a partition achieving it.
  auto mc = query(T::kMaxCut, g);
  EXPECT_EQ(grade(mc, "The maximum cut size is 4."), 0);
  EXPECT_EQ(grade(mc, "The maximum cut size is 4, with partition {0, 1} and {2, 3}."), 0);
  EXPECT_EQ(grade(mc, "The maximum cut size is 4, with partition {0, 2} and {1, 3}."), 1);
  // Hamiltonian "yes" needs a checkable tour.
  auto hc = query(T::kHamiltonian, g);
  EXPECT_EQ(grade(hc, "Yes, there is a Hamiltonian cycle."), 0);
  EXPECT_EQ(grade(hc, "Yes, there is a Hamiltonian cycle. The Hamiltonian cycle is 0,2,1,3,0."), 0);
  EXPECT_EQ(grade(hc, "Yes, there is a Hamiltonian cycle. The Hamiltonian cycle is 0,1,2,3,0."), 1);
  auto none = query(T::kHamiltonian, gb::Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(grade(none, "No, there is no Hamiltonian cycle in this graph."), 1);
}
