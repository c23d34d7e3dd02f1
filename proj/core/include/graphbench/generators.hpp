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

// Random graph families and the difficulty splits they are sampled under.
//
// Every generator is a pure function of its arguments and the random stream
// it is handed. Corpus builders derive one stream per item (derive_seed) so
// that items can be produced in any order, or in parallel, with identical
// output.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>
#include <vector>

#include "graphbench/graph.hpp"
#include "graphbench/tasks.hpp"

namespace graphbench {

using Rng = std::mt19937_64;

enum class GraphFamily { kERM, kERP, kBERM, kBERP, kBAG, kBAF, kSF };

inline constexpr std::array<GraphFamily, 7> kAllFamilies = {
    GraphFamily::kERM, GraphFamily::kERP, GraphFamily::kBERM, GraphFamily::kBERP,
    GraphFamily::kBAG, GraphFamily::kBAF, GraphFamily::kSF,
};

// "ERM", "ERP", "BERM", "BERP", "BAG", "BAF", "SF".
std::string_view family_name(GraphFamily family);
// Case-insensitive; also accepts "bipartite-erm" / "bipartite-erp".
GraphFamily parse_family(std::string_view name);

enum class Difficulty { kEasy, kMedium, kHard };

inline constexpr std::array<Difficulty, 3> kAllDifficulties = {
    Difficulty::kEasy, Difficulty::kMedium, Difficulty::kHard};

std::string_view difficulty_name(Difficulty d);  // "easy" / "medium" / "hard"
Difficulty parse_difficulty(std::string_view name);

struct NodeRange {
  std::size_t min = 0;
  std::size_t max = 0;  // inclusive
};

// Easy [5,10], Medium [10,20], Hard [20,30].
NodeRange node_range(Difficulty d);

std::size_t sample_n(Difficulty d, Rng& rng);
std::size_t sample_n(NodeRange range, Rng& rng);

// Smallest n each family can be built on.
std::size_t min_nodes(GraphFamily family);

// Seed-graph size for the Barabási–Albert families: uniform on
// {2, ..., max(2, floor(n/3))}.
std::size_t sample_seed_size(std::size_t n, Rng& rng);

// --- Family constructors with explicit parameters -------------------------

Graph erdos_renyi_m(std::size_t n, std::size_t m, Rng& rng);
Graph erdos_renyi_p(std::size_t n, double p, Rng& rng);
// Nodes are split into a random side of `left` nodes and the remaining
// n - left; edges only cross sides.
Graph bipartite_erdos_renyi_m(std::size_t n, std::size_t left, std::size_t m, Rng& rng);
Graph bipartite_erdos_renyi_p(std::size_t n, std::size_t left, double p, Rng& rng);
// Complete seed on nodes 0..m0-1; node v >= m0 then links to
// min(m0 + 1, v) distinct existing nodes chosen proportionally to degree.
Graph barabasi_albert(std::size_t n, std::size_t m0, Rng& rng);
// m0 isolated roots; every later node adds one edge to an existing node
// chosen proportionally to degree + 1. Always a forest with n - m0 edges.
Graph barabasi_albert_forest(std::size_t n, std::size_t m0, Rng& rng);
// All nodes up front, then edges whose endpoints are both drawn
// proportionally to degree + 1 until `target_edges` distinct edges exist.
Graph scale_free(std::size_t n, std::size_t target_edges, Rng& rng);
// Same process, but insertion continues past `target_edges` until the graph
// is connected.
Graph scale_free_connected(std::size_t n, std::size_t target_edges, Rng& rng);

// --- Family-level sampling ------------------------------------------------

// Samples the family's parameters (m, p, side split, m0, edge budget) and
// builds the graph. Throws Error(kInvalidN) when n < min_nodes(family).
Graph generate(GraphFamily family, std::size_t n, Rng& rng);

// Redraws generate() until the result is connected (SF grows a single
// draw instead, see scale_free_connected). Throws
// Error(kExhaustedAttempts) after max_attempts failures.
Graph generate_connected(GraphFamily family, std::size_t n, Rng& rng,
                         std::size_t max_attempts = 1000);

// Task/family admissibility. Order follows kAllFamilies.
std::vector<GraphFamily> admissible_families(TaskKind task);
bool is_admissible(TaskKind task, GraphFamily family);

// Mixes a master seed with item coordinates into an independent seed.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> parts);

}  // namespace graphbench
