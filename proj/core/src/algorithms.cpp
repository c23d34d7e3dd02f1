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

#include "graphbench/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>

#include "graphbench/error.hpp"

namespace graphbench {
namespace {

using Mask = std::uint64_t;

void require_node(const Graph& g, Node u) {
  if (!g.contains(u)) {
    throw Error(ErrorCode::kNodeOutOfRange,
                "node " + std::to_string(u) + " outside [0, " +
                    std::to_string(g.node_count()) + ")");
  }
}

void require_small(const Graph& g, const SolverLimits& limits, const char* what) {
  if (g.node_count() > limits.max_nodes || g.node_count() > 63) {
    throw Error(ErrorCode::kTooLarge, std::string(what) + ": " +
                                          std::to_string(g.node_count()) +
                                          " nodes exceeds cap of " +
                                          std::to_string(limits.max_nodes));
  }
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> masks(g.node_count(), 0);
  for (const Edge& e : g.edges()) {
    masks[e.u] |= Mask{1} << e.v;
    masks[e.v] |= Mask{1} << e.u;
  }
  return masks;
}

Mask bit(Node v) { return Mask{1} << v; }

// True when every node of `nodes` is reachable from `from` inside `nodes`.
bool mask_connected(const std::vector<Mask>& adj, Mask nodes, Node from) {
  Mask seen = bit(from);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) {
      next |= adj[std::countr_zero(f)];
    }
    next &= nodes & ~seen;
    seen |= next;
    frontier = next;
  }
  return (nodes & ~seen) == 0;
}

class HamiltonianSearch {
 public:
  explicit HamiltonianSearch(const Graph& g)
      : n_(static_cast<int>(g.node_count())), adj_(adjacency_masks(g)) {}

  std::optional<std::vector<Node>> run() {
    path_.assign(1, 0);
    Mask unvisited = (n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1) & ~bit(0);
    if (extend(0, unvisited)) return path_;
    return std::nullopt;
  }

 private:
  bool feasible(Node end, Mask unvisited) const {
    if (unvisited == 0) return (adj_[end] & bit(0)) != 0;
    if ((adj_[0] & unvisited) == 0 || (adj_[end] & unvisited) == 0) return false;
    // Each remaining node needs two cycle neighbours among the remaining
    // nodes, the current path end, and the start.
    const Mask pool = unvisited | bit(end) | bit(0);
    for (Mask u = unvisited; u != 0; u &= u - 1) {
      if (std::popcount(adj_[std::countr_zero(u)] & pool) < 2) return false;
    }
    return mask_connected(adj_, unvisited | bit(end), end);
  }

  bool extend(Node end, Mask unvisited) {
    if (unvisited == 0) return (adj_[end] & bit(0)) != 0;
    for (Mask cand = adj_[end] & unvisited; cand != 0; cand &= cand - 1) {
      const Node next = std::countr_zero(cand);
      const Mask rest = unvisited & ~bit(next);
      if (!feasible(next, rest)) continue;
      path_.push_back(next);
      if (extend(next, rest)) return true;
      path_.pop_back();
    }
    return false;
  }

  int n_;
  std::vector<Mask> adj_;
  std::vector<Node> path_;
};

}  // namespace

bool has_cycle(const Graph& g) {
  // A forest has exactly n - c edges.
  return g.edge_count() + component_count(g) > g.node_count();
}

std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(g.node_count(), -1);
  int next = 0;
  std::deque<Node> queue;
  for (Node s = 0; s < static_cast<Node>(g.node_count()); ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    queue.push_back(s);
    while (!queue.empty()) {
      Node u = queue.front();
      queue.pop_front();
      for (Node w : g.neighbors(u)) {
        if (label[w] == -1) {
          label[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::size_t component_count(const Graph& g) {
  auto labels = component_labels(g);
  return labels.empty() ? 0 : static_cast<std::size_t>(*std::max_element(labels.begin(), labels.end()) + 1);
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool connected(const Graph& g, Node u, Node v) {
  require_node(g, u);
  require_node(g, v);
  return bfs_levels(g, u)[v] != kUnreachable;
}

std::vector<int> bfs_levels(const Graph& g, Node s) {
  require_node(g, s);
  std::vector<int> dist(g.node_count(), kUnreachable);
  std::deque<Node> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    Node u = queue.front();
    queue.pop_front();
    for (Node w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<Node> bfs_order(const Graph& g, Node s) {
  require_node(g, s);
  std::vector<bool> seen(g.node_count(), false);
  std::vector<Node> order{s};
  seen[s] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Node w : g.neighbors(order[head])) {
      if (!seen[w]) {
        seen[w] = true;
        order.push_back(w);
      }
    }
  }
  return order;
}

int diameter(const Graph& g) {
  int best = 0;
  for (Node s = 0; s < static_cast<Node>(g.node_count()); ++s) {
    for (int d : bfs_levels(g, s)) {
      if (d == kUnreachable) {
        throw Error(ErrorCode::kDisconnectedGraph, "diameter undefined: graph is disconnected");
      }
      best = std::max(best, d);
    }
  }
  return best;
}

std::size_t triangle_count(const Graph& g) {
  std::size_t count = 0;
  for (const Edge& e : g.edges()) {
    // Count common neighbours w > v so each triangle u<v<w is seen once.
    auto a = g.neighbors(e.u);
    auto b = g.neighbors(e.v);
    auto ia = std::upper_bound(a.begin(), a.end(), e.v);
    auto ib = std::upper_bound(b.begin(), b.end(), e.v);
    while (ia != a.end() && ib != b.end()) {
      if (*ia < *ib) {
        ++ia;
      } else if (*ib < *ia) {
        ++ib;
      } else {
        ++count;
        ++ia;
        ++ib;
      }
    }
  }
  return count;
}

std::optional<int> shortest_distance(const Graph& g, Node u, Node v) {
  require_node(g, v);
  int d = bfs_levels(g, u)[v];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

std::optional<std::vector<Node>> shortest_path(const Graph& g, Node u, Node v) {
  require_node(g, u);
  require_node(g, v);
  std::vector<Node> parent(g.node_count(), -1);
  std::vector<bool> seen(g.node_count(), false);
  std::deque<Node> queue{u};
  seen[u] = true;
  while (!queue.empty() && !seen[v]) {
    Node x = queue.front();
    queue.pop_front();
    for (Node w : g.neighbors(x)) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = x;
        queue.push_back(w);
      }
    }
  }
  if (!seen[v]) return std::nullopt;
  std::vector<Node> path;
  for (Node x = v; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<std::vector<Node>> hamiltonian_cycle(const Graph& g, const SolverLimits& limits) {
  require_small(g, limits, "hamiltonian_cycle");
  const std::size_t n = g.node_count();
  if (n < 3) return std::nullopt;
  for (Node v = 0; v < static_cast<Node>(n); ++v) {
    if (g.degree(v) < 2) return std::nullopt;
  }
  if (!is_connected(g)) return std::nullopt;
  return HamiltonianSearch(g).run();
}

bool is_hamiltonian_cycle(const Graph& g, std::span<const Node> tour) {
  const std::size_t n = g.node_count();
  if (n < 3) return false;
  if (tour.size() == n + 1 && tour.front() == tour.back()) tour = tour.first(n);
  if (tour.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Node v : tour) {
    if (!g.contains(v) || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.has_edge(tour[i], tour[(i + 1) % n])) return false;
  }
  return true;
}

Cut max_cut(const Graph& g, const SolverLimits& limits) {
  require_small(g, limits, "max_cut");
  const std::size_t n = g.node_count();
  Cut best{0, std::vector<bool>(n, false)};
  if (n < 2) return best;
  const auto adj = adjacency_masks(g);
  Mask side = 0;  // bit set = second class
  const Mask all = (Mask{1} << n) - 1;
  long long cut = 0;
  long long best_cut = 0;
  Mask best_side = 0;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < steps; ++i) {
    const Node v = std::countr_zero(i) + 1;
    const Mask same = (side & bit(v)) ? side : (all & ~side);
    const int inside = std::popcount(adj[v] & same);
    const int across = std::popcount(adj[v] & ~same);
    cut += inside - across;
    side ^= bit(v);
    if (cut > best_cut) {
      best_cut = cut;
      best_side = side;
    }
  }
  best.size = static_cast<std::size_t>(best_cut);
  for (std::size_t v = 0; v < n; ++v) best.side[v] = (best_side >> v) & 1U;
  return best;
}

std::size_t verify_cut(const Graph& g, const std::vector<bool>& side) {
  if (side.size() != g.node_count()) {
    throw Error(ErrorCode::kInvalidArgument, "partition size does not match node count");
  }
  std::size_t crossing = 0;
  for (const Edge& e : g.edges()) crossing += side[e.u] != side[e.v];
  return crossing;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.node_count(), -1);
  std::deque<Node> queue;
  for (Node s = 0; s < static_cast<Node>(g.node_count()); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      Node u = queue.front();
      queue.pop_front();
      for (Node w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Node v = 0; v < static_cast<Node>(g.node_count()); ++v) best = std::max(best, g.degree(v));
  return best;
}

double average_clustering(const Graph& g) {
  if (g.node_count() == 0) return 0.0;
  double total = 0.0;
  for (Node v = 0; v < static_cast<Node>(g.node_count()); ++v) {
    auto nb = g.neighbors(v);
    const std::size_t k = nb.size();
    if (k < 2) continue;
    std::size_t links = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) links += g.has_edge(nb[i], nb[j]);
    }
    total += 2.0 * static_cast<double>(links) / static_cast<double>(k * (k - 1));
  }
  return total / static_cast<double>(g.node_count());
}

}  // namespace graphbench
