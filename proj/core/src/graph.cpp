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

#include "graphbench/graph.hpp"

#include <algorithm>
#include <utility>

#include "graphbench/error.hpp"

namespace graphbench {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNodeOutOfRange: return "NodeOutOfRange";
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidN: return "InvalidN";
    case ErrorCode::kExhaustedAttempts: return "ExhaustedAttempts";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kMissingParam: return "MissingParam";
    case ErrorCode::kEmptyBank: return "EmptyBank";
    case ErrorCode::kMixedTasks: return "MixedTasks";
    case ErrorCode::kRateLimited: return "RateLimited";
    case ErrorCode::kTransportError: return "TransportError";
    case ErrorCode::kMalformedResponse: return "MalformedResponse";
    case ErrorCode::kEmptyFactor: return "EmptyFactor";
    case ErrorCode::kZeroDenominator: return "ZeroDenominator";
    case ErrorCode::kEmptyGroup: return "EmptyGroup";
    case ErrorCode::kInsufficientCoverage: return "InsufficientCoverage";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Graph::Graph(std::size_t node_count) : adjacency_(node_count) {}

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges) {
  Graph g(node_count);
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (!g.contains(e.u) || !g.contains(e.v)) {
      throw Error(ErrorCode::kNodeOutOfRange,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                      ") outside node range [0, " + std::to_string(node_count) + ")");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kInvalidGraph, "self-loop on node " + std::to_string(e.u));
    }
    g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw Error(ErrorCode::kInvalidGraph, "duplicate edge (" + std::to_string(dup->u) +
                                              ", " + std::to_string(dup->v) + ")");
  }
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

std::span<const Node> Graph::neighbors(Node u) const {
  if (!contains(u)) {
    throw Error(ErrorCode::kNodeOutOfRange, "node " + std::to_string(u) + " out of range");
  }
  return adjacency_[u];
}

bool Graph::has_edge(Node u, Node v) const {
  auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::string Graph::canonical_key() const {
  std::string key = std::to_string(node_count()) + ":";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i != 0) key += ',';
    key += std::to_string(edges_[i].u);
    key += '-';
    key += std::to_string(edges_[i].v);
  }
  return key;
}

}  // namespace graphbench
