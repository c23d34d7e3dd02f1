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

// Exact graph algorithms. These are the ground-truth oracles for every task
// and the building blocks of the answer verifiers. All functions are pure.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "graphbench/graph.hpp"

namespace graphbench {

inline constexpr int kUnreachable = -1;

bool has_cycle(const Graph& g);

// Component id per node, ids assigned in order of smallest member.
std::vector<int> component_labels(const Graph& g);
std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);

// Throws Error(kNodeOutOfRange).
bool connected(const Graph& g, Node u, Node v);

// Hop distance from s for every node; kUnreachable where no path exists.
std::vector<int> bfs_levels(const Graph& g, Node s);

// The BFS order that visits neighbours in ascending id order.
std::vector<Node> bfs_order(const Graph& g, Node s);

// Largest eccentricity. Throws Error(kDisconnectedGraph) when some pair is
// unreachable. Graphs with fewer than two nodes have diameter 0.
int diameter(const Graph& g);

std::size_t triangle_count(const Graph& g);

std::optional<int> shortest_distance(const Graph& g, Node u, Node v);
// One shortest path, lexicographically smallest by predecessor choice.
std::optional<std::vector<Node>> shortest_path(const Graph& g, Node u, Node v);

struct SolverLimits {
  std::size_t max_nodes = 25;
};

// Backtracking search from node 0 with degree and connectivity pruning.
// Returns a tour listing every node once (the closing edge back to the first
// node is implied). Throws Error(kTooLarge) above limits.max_nodes.
std::optional<std::vector<Node>> hamiltonian_cycle(const Graph& g,
                                                   const SolverLimits& limits = {});

// Accepts a tour either open (n distinct nodes) or closed (first node
// repeated at the end).
bool is_hamiltonian_cycle(const Graph& g, std::span<const Node> tour);

struct Cut {
  std::size_t size = 0;
  // side[v] == true puts v in the second class; node 0 is always false.
  std::vector<bool> side;
};

// Exhaustive search over the 2^(n-1) bipartitions in Gray-code order.
// Throws Error(kTooLarge) above limits.max_nodes.
Cut max_cut(const Graph& g, const SolverLimits& limits = {});

// Number of edges crossing the given bipartition. Throws
// Error(kInvalidArgument) when side.size() != n.
std::size_t verify_cut(const Graph& g, const std::vector<bool>& side);

// 0/1 colour per node, or nullopt if the graph has an odd cycle.
std::optional<std::vector<int>> two_coloring(const Graph& g);
bool is_bipartite(const Graph& g);

std::size_t max_degree(const Graph& g);
// Mean local clustering coefficient; nodes of degree < 2 contribute 0.
double average_clustering(const Graph& g);

}  // namespace graphbench
