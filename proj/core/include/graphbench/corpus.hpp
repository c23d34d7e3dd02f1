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


// Reproducible query corpora: construction, JSONL I/O, statistics and the
// self-check that backs `graphbench selfcheck`.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphbench/generators.hpp"
#include "graphbench/graph.hpp"
#include "graphbench/query.hpp"
#include "graphbench/tasks.hpp"

namespace graphbench {

struct CorpusOptions {
  SolverLimits limits;
  // Redraws allowed when a graph cannot carry the query (disconnected
  // diameter graph, no reachable pair, wrong Hamiltonian label).
  std::size_t max_attempts = 1000;
  // Reseeds allowed when an item repeats an edge set already in its cell.
  std::size_t dedup_attempts = 100;
};

// Node range actually sampled for (task, split). Hamiltonian and max-cut
// shrink the Hard split to (20, limits.max_nodes].
NodeRange task_node_range(TaskKind task, Difficulty split, const SolverLimits& limits = {});

// "<task>-<split>-<family>-<index>", e.g. "cycle-easy-ERM-00003".
std::string query_id(TaskKind task, Difficulty split, GraphFamily family, std::size_t index);

// Builds one item as a pure function of its arguments. `index` enters the
// random stream and, for Hamiltonian items, fixes the label (even index:
// a Hamiltonian cycle exists).
QuerySpec make_query(TaskKind task, Difficulty split, GraphFamily family, std::uint64_t seed,
                     std::size_t index, const CorpusOptions& options = {});

struct CorpusConfig {
  std::vector<TaskKind> tasks;
  std::vector<Difficulty> splits;
  // Empty: every admissible family. Otherwise intersected with the
  // admissible set of each task.
  std::vector<GraphFamily> families;
  std::size_t count = 10;
  // false: `count` items per (task, split, family) cell.
  // true: `count` items per (task, split), families taken round-robin.
  bool count_is_total = false;
  std::uint64_t seed = 0;
  CorpusOptions options;
};

// Items in (task, split, family, index) order. Edge sets never repeat within
// a (task, split, family) cell.
std::vector<QuerySpec> build_corpus(const CorpusConfig& config);

// --- JSONL ------------------------------------------------------------------

std::string to_jsonl(const QuerySpec& query);
// Throws Error(kMalformedInput) on schema violations.
QuerySpec query_from_jsonl(std::string_view line);

void write_corpus(std::ostream& out, const std::vector<QuerySpec>& corpus);
std::vector<QuerySpec> read_corpus(std::istream& in);
std::vector<QuerySpec> read_corpus(const std::filesystem::path& path);

// --- External graphs ----------------------------------------------------------

// "u v" lines with arbitrary non-negative ids, compacted to 0..n-1 in order
// of first appearance after sorting ids. Blank lines and '#' comments are
// skipped. Throws Error(kMalformedInput).
Graph parse_edge_list_compact(std::string_view text);
Graph import_edge_list(const std::filesystem::path& path);

// --- Statistics ----------------------------------------------------------------

struct CellStats {
  TaskKind task;
  GraphFamily family;
  Difficulty split;
  std::size_t count = 0;
  double avg_nodes = 0.0;
  double avg_edges = 0.0;
};

// One row per non-empty (task, family, split) cell.
std::vector<CellStats> corpus_stats(const std::vector<QuerySpec>& corpus);

// --- Self-check -------------------------------------------------------------------

struct SelfCheckIssue {
  std::size_t line = 0;  // 1-based
  std::string id;
  std::string message;
};

// Re-solves every ground truth and, for items carrying a seed, regenerates
// the item and compares every field. Also flags duplicate ids and lines
// that fail to parse.
std::vector<SelfCheckIssue> selfcheck(std::istream& in, const CorpusOptions& options = {});

}  // namespace graphbench
