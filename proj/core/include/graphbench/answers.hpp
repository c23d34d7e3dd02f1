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

// Key-phrase answer extraction and binary scoring.

#pragma once

#include <cstdint>
#include <filesystem>
#include <regex>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graphbench/graph.hpp"
#include "graphbench/query.hpp"
#include "graphbench/tasks.hpp"

namespace graphbench {

struct NotFound {
  friend bool operator==(const NotFound&, const NotFound&) = default;
};
struct Number {
  std::int64_t value = 0;
  friend bool operator==(const Number&, const Number&) = default;
};
struct NodeSequence {
  std::vector<Node> nodes;
  friend bool operator==(const NodeSequence&, const NodeSequence&) = default;
};
// Max-cut claim. `first`/`second` are empty when no partition was stated.
struct CutClaim {
  std::int64_t size = 0;
  std::vector<Node> first;
  std::vector<Node> second;
  friend bool operator==(const CutClaim&, const CutClaim&) = default;
};
// Hamiltonian claim: the decision plus the tour, if one was written out.
struct CycleClaim {
  bool exists = false;
  std::vector<Node> tour;
  friend bool operator==(const CycleClaim&, const CycleClaim&) = default;
};

using ExtractedAnswer = std::variant<NotFound, bool, Number, NodeSequence, CutClaim, CycleClaim>;

enum class PatternKind { kYes, kNo, kValue, kPartition };

struct AnswerPattern {
  TaskKind task;
  int priority = 0;
  PatternKind kind = PatternKind::kValue;
  std::string source;
  std::regex regex;
};

// The rule table behind extract(). Rows are "<task> <priority> <kind>
// <regex>"; '#' starts a comment line.
class PatternSet {
 public:
  static const PatternSet& defaults();
  static PatternSet from_text(std::string_view text);
  static PatternSet from_file(const std::filesystem::path& path);

  std::vector<const AnswerPattern*> for_task(TaskKind task, PatternKind kind) const;
  std::size_t size() const { return patterns_.size(); }

 private:
  std::vector<AnswerPattern> patterns_;
};

ExtractedAnswer extract(TaskKind task, std::string_view response,
                        const PatternSet& patterns = PatternSet::defaults());

// Compact text form used in result records, e.g. "yes", "4", "7,0,9",
// "4 {0,2}|{1,3}", "yes 0,1,2,3", "not-found".
std::string describe(const ExtractedAnswer& answer);

// True iff `seq` is an order some BFS from `s` can produce: it starts at s,
// covers exactly the nodes reachable from s, and each dequeued node's
// unvisited neighbours form the next block of the sequence.
bool verify_bfs_order(const Graph& g, Node s, std::span<const Node> seq);

// True iff `seq` is a simple u..v walk along edges whose length equals the
// hop distance between u and v.
bool verify_shortest_path(const Graph& g, Node u, Node v, std::span<const Node> seq);

// Checks `first`/`second` split the node set and cross exactly `size` edges.
bool verify_cut_claim(const Graph& g, const CutClaim& claim);

// 1 when the answer is correct for the query, else 0. NotFound scores 0.
int score(const QuerySpec& query, const ExtractedAnswer& answer);

}  // namespace graphbench
