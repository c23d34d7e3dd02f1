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

#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace graphbench {

// Nodes are dense integers 0..n-1. Nothing in the library relabels them.
using Node = int;

struct Edge {
  Node u = 0;
  Node v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph. Immutable after construction; the edge list is
// kept in canonical order (u < v, lexicographic) and every adjacency list is
// ascending.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count);

  // Throws Error(kNodeOutOfRange) for endpoints outside [0, n) and
  // Error(kInvalidGraph) for self-loops or repeated edges. Endpoint order of
  // the input pairs does not matter.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges);
  static Graph from_edges(std::size_t node_count,
                          std::initializer_list<Edge> edges) {
    return from_edges(node_count, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Node> neighbors(Node u) const;
  std::size_t degree(Node u) const { return neighbors(u).size(); }
  bool has_edge(Node u, Node v) const;
  bool contains(Node u) const noexcept {
    return u >= 0 && static_cast<std::size_t>(u) < adjacency_.size();
  }

  // "n:u-v,u-v,..." with canonical edge order; used for hashing and dedup.
  std::string canonical_key() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Node>> adjacency_;
};

}  // namespace graphbench
