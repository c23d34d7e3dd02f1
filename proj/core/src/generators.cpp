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

#include "graphbench/generators.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numeric>
#include <set>
#include <string>

#include "graphbench/algorithms.hpp"
#include "graphbench/error.hpp"
#include "text_util.hpp"

namespace graphbench {
namespace {

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  pairs.reserve(pair_count(n));
  for (Node u = 0; u < static_cast<Node>(n); ++u) {
    for (Node v = u + 1; v < static_cast<Node>(n); ++v) pairs.push_back({u, v});
  }
  return pairs;
}

std::vector<Edge> cross_pairs(std::size_t n, std::size_t left, Rng& rng) {
  if (left < 2 || n < left + 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "bipartite sides need at least two nodes each (n=" + std::to_string(n) +
                    ", left=" + std::to_string(left) + ")");
  }
  std::vector<Node> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> on_left(n, false);
  for (std::size_t i = 0; i < left; ++i) on_left[order[i]] = true;
  std::vector<Edge> pairs;
  for (const Edge& e : all_pairs(n)) {
    if (on_left[e.u] != on_left[e.v]) pairs.push_back(e);
  }
  return pairs;
}

std::vector<Edge> sample_m(const std::vector<Edge>& pairs, std::size_t m, Rng& rng) {
  if (m > pairs.size()) {
    throw Error(ErrorCode::kInvalidArgument, "requested more edges than available pairs");
  }
  std::vector<Edge> chosen;
  chosen.reserve(m);
  std::sample(pairs.begin(), pairs.end(), std::back_inserter(chosen), m, rng);
  return chosen;
}

std::vector<Edge> sample_p(const std::vector<Edge>& pairs, double p, Rng& rng) {
  std::bernoulli_distribution keep(std::clamp(p, 0.0, 1.0));
  std::vector<Edge> chosen;
  for (const Edge& e : pairs) {
    if (keep(rng)) chosen.push_back(e);
  }
  return chosen;
}

std::size_t uniform_between(std::size_t lo, std::size_t hi, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Index drawn with probability proportional to weights[i].
std::size_t weighted_pick(const std::vector<double>& weights, Rng& rng) {
  return std::discrete_distribution<std::size_t>(weights.begin(), weights.end())(rng);
}

void require_min(GraphFamily family, std::size_t n) {
  if (n < min_nodes(family)) {
    throw Error(ErrorCode::kInvalidN, std::string(family_name(family)) + " needs n >= " +
                                          std::to_string(min_nodes(family)) + ", got " +
                                          std::to_string(n));
  }
}

}  // namespace

std::string_view family_name(GraphFamily family) {
  switch (family) {
    case GraphFamily::kERM: return "ERM";
    case GraphFamily::kERP: return "ERP";
    case GraphFamily::kBERM: return "BERM";
    case GraphFamily::kBERP: return "BERP";
    case GraphFamily::kBAG: return "BAG";
    case GraphFamily::kBAF: return "BAF";
    case GraphFamily::kSF: return "SF";
  }
  return "unknown";
}

GraphFamily parse_family(std::string_view name) {
  const std::string key = detail::to_upper(detail::normalize_key(name));
  for (GraphFamily f : kAllFamilies) {
    if (key == family_name(f)) return f;
  }
  if (key == "BIPARTITE-ERM") return GraphFamily::kBERM;
  if (key == "BIPARTITE-ERP") return GraphFamily::kBERP;
  throw Error(ErrorCode::kInvalidArgument, "unknown graph family '" + std::string(name) + "'");
}

std::string_view difficulty_name(Difficulty d) {
  switch (d) {
    case Difficulty::kEasy: return "easy";
    case Difficulty::kMedium: return "medium";
    case Difficulty::kHard: return "hard";
  }
  return "unknown";
}

Difficulty parse_difficulty(std::string_view name) {
  const std::string key = detail::to_lower(name);
  for (Difficulty d : kAllDifficulties) {
    if (key == difficulty_name(d)) return d;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown difficulty '" + std::string(name) + "'");
}

NodeRange node_range(Difficulty d) {
  switch (d) {
    case Difficulty::kEasy: return {5, 10};
    case Difficulty::kMedium: return {10, 20};
    case Difficulty::kHard: return {20, 30};
  }
  return {5, 10};
}

std::size_t sample_n(Difficulty d, Rng& rng) { return sample_n(node_range(d), rng); }

std::size_t sample_n(NodeRange range, Rng& rng) {
  return uniform_between(range.min, range.max, rng);
}

std::size_t min_nodes(GraphFamily family) {
  switch (family) {
    case GraphFamily::kERM: return 2;
    case GraphFamily::kERP: return 1;
    case GraphFamily::kBERM:
    case GraphFamily::kBERP: return 4;
    case GraphFamily::kBAG: return 3;
    case GraphFamily::kBAF: return 2;
    case GraphFamily::kSF: return 3;
  }
  return 1;
}

std::size_t sample_seed_size(std::size_t n, Rng& rng) {
  return uniform_between(2, std::max<std::size_t>(2, n / 3), rng);
}

Graph erdos_renyi_m(std::size_t n, std::size_t m, Rng& rng) {
  auto edges = sample_m(all_pairs(n), m, rng);
  return Graph::from_edges(n, edges);
}

Graph erdos_renyi_p(std::size_t n, double p, Rng& rng) {
  auto edges = sample_p(all_pairs(n), p, rng);
  return Graph::from_edges(n, edges);
}

Graph bipartite_erdos_renyi_m(std::size_t n, std::size_t left, std::size_t m, Rng& rng) {
  auto edges = sample_m(cross_pairs(n, left, rng), m, rng);
  return Graph::from_edges(n, edges);
}

Graph bipartite_erdos_renyi_p(std::size_t n, std::size_t left, double p, Rng& rng) {
  auto edges = sample_p(cross_pairs(n, left, rng), p, rng);
  return Graph::from_edges(n, edges);
}

Graph barabasi_albert(std::size_t n, std::size_t m0, Rng& rng) {
  if (m0 < 1 || m0 > n) {
    throw Error(ErrorCode::kInvalidArgument, "seed size must lie in [1, n]");
  }
  std::vector<Edge> edges;
  std::vector<double> degree(n, 0.0);
  for (Node u = 0; u < static_cast<Node>(m0); ++u) {
    for (Node v = u + 1; v < static_cast<Node>(m0); ++v) {
      edges.push_back({u, v});
      degree[u] += 1;
      degree[v] += 1;
    }
  }
  for (Node v = static_cast<Node>(m0); v < static_cast<Node>(n); ++v) {
    const std::size_t links = std::min<std::size_t>(m0 + 1, static_cast<std::size_t>(v));
    std::vector<double> weights(degree.begin(), degree.begin() + v);
    if (std::all_of(weights.begin(), weights.end(), [](double w) { return w == 0.0; })) {
      std::fill(weights.begin(), weights.end(), 1.0);
    }
    for (std::size_t k = 0; k < links; ++k) {
      const auto target = static_cast<Node>(weighted_pick(weights, rng));
      weights[target] = 0.0;
      edges.push_back({target, v});
      if (k + 1 < links &&
          std::all_of(weights.begin(), weights.end(), [](double w) { return w == 0.0; })) {
        // Every remaining candidate had degree 0; fall back to uniform.
        for (Node u = 0; u < v; ++u) {
          if (std::none_of(edges.end() - static_cast<long>(k + 1), edges.end(),
                           [u](const Edge& e) { return e.u == u; })) {
            weights[u] = 1.0;
          }
        }
      }
    }
    for (auto it = edges.end() - static_cast<long>(links); it != edges.end(); ++it) {
      degree[it->u] += 1;
      degree[it->v] += 1;
    }
  }
  return Graph::from_edges(n, edges);
}

Graph barabasi_albert_forest(std::size_t n, std::size_t m0, Rng& rng) {
  if (m0 < 1 || m0 > n) {
    throw Error(ErrorCode::kInvalidArgument, "root count must lie in [1, n]");
  }
  std::vector<Edge> edges;
  std::vector<double> weight(n, 1.0);  // degree + 1
  for (Node v = static_cast<Node>(m0); v < static_cast<Node>(n); ++v) {
    std::vector<double> candidates(weight.begin(), weight.begin() + v);
    const auto target = static_cast<Node>(weighted_pick(candidates, rng));
    edges.push_back({target, v});
    weight[target] += 1;
    weight[v] += 1;
  }
  return Graph::from_edges(n, edges);
}

namespace {

// Degree-weighted insertion until `enough` holds or the draw budget runs out.
template <typename Stop>
Graph scale_free_until(std::size_t n, std::size_t max_edges, Rng& rng, Stop enough) {
  std::vector<double> weight(n, 1.0);  // degree + 1
  std::set<Edge> edges;
  const std::size_t max_draws = 1000 * (max_edges + 1);
  for (std::size_t draws = 0; !enough(edges) && edges.size() < max_edges && draws < max_draws; ++draws) {
    auto u = static_cast<Node>(weighted_pick(weight, rng));
    auto v = static_cast<Node>(weighted_pick(weight, rng));
    if (u == v) continue;
    Edge e = u < v ? Edge{u, v} : Edge{v, u};
    if (!edges.insert(e).second) continue;
    weight[u] += 1;
    weight[v] += 1;
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(n, list);
}

}  // namespace

Graph scale_free(std::size_t n, std::size_t target_edges, Rng& rng) {
  target_edges = std::min(target_edges, pair_count(n));
  return scale_free_until(n, target_edges, rng, [&](const std::set<Edge>& e) { return e.size() >= target_edges; });
}

Graph scale_free_connected(std::size_t n, std::size_t target_edges, Rng& rng) {
  target_edges = std::min(target_edges, pair_count(n));
  std::size_t last = 0;
  std::vector<Node> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::size_t components = n;
  auto find = [&](Node x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // The edge set is unordered by insertion; union whatever is new.
  std::set<Edge> seen;
  return scale_free_until(n, pair_count(n), rng, [&](const std::set<Edge>& edges) {
    if (edges.size() != last) {
      for (const Edge& e : edges) {
        if (seen.insert(e).second) {
          Node a = find(e.u), b = find(e.v);
          if (a != b) {
            parent[a] = b;
            --components;
          }
        }
      }
      last = edges.size();
    }
    return edges.size() >= target_edges && components <= 1;
  });
}

Graph generate(GraphFamily family, std::size_t n, Rng& rng) {
  require_min(family, n);
  switch (family) {
    case GraphFamily::kERM:
      return erdos_renyi_m(n, uniform_between(1, pair_count(n), rng), rng);
    case GraphFamily::kERP:
      return erdos_renyi_p(n, std::uniform_real_distribution<double>(0.0, 1.0)(rng), rng);
    case GraphFamily::kBERM: {
      const std::size_t left = uniform_between(2, n - 2, rng);
      return bipartite_erdos_renyi_m(n, left, uniform_between(1, left * (n - left), rng), rng);
    }
    case GraphFamily::kBERP: {
      const std::size_t left = uniform_between(2, n - 2, rng);
      return bipartite_erdos_renyi_p(n, left,
                                     std::uniform_real_distribution<double>(0.0, 1.0)(rng), rng);
    }
    case GraphFamily::kBAG:
      return barabasi_albert(n, sample_seed_size(n, rng), rng);
    case GraphFamily::kBAF:
      return barabasi_albert_forest(n, sample_seed_size(n, rng), rng);
    case GraphFamily::kSF: {
      const auto hi = static_cast<std::size_t>(std::ceil(1.5 * static_cast<double>(n)));
      return scale_free(n, uniform_between(n, hi, rng), rng);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown family");
}

Graph generate_connected(GraphFamily family, std::size_t n, Rng& rng,
                         std::size_t max_attempts) {
  if (family == GraphFamily::kSF) {
    // Rejection almost never succeeds past n ~ 20; keep inserting instead.
    require_min(family, n);
    const auto hi = static_cast<std::size_t>(std::ceil(1.5 * static_cast<double>(n)));
    return scale_free_connected(n, uniform_between(n, hi, rng), rng);
  }
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    Graph g = generate(family, n, rng);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorCode::kExhaustedAttempts,
              "no connected " + std::string(family_name(family)) + " graph on " +
                  std::to_string(n) + " nodes after " + std::to_string(max_attempts) +
                  " attempts");
}

std::vector<GraphFamily> admissible_families(TaskKind task) {
  using F = GraphFamily;
  switch (task) {
    case TaskKind::kConnectivity: return {F::kERM, F::kERP, F::kBERM, F::kBERP, F::kBAF};
    case TaskKind::kCycle: return {F::kERM, F::kERP, F::kBERM, F::kBERP, F::kBAG, F::kSF};
    case TaskKind::kDiameter:
    case TaskKind::kTriangle: return {F::kERM, F::kERP, F::kBAG, F::kSF};
    case TaskKind::kHamiltonian: return {F::kERM, F::kERP, F::kBAG};
    case TaskKind::kBfsOrder:
    case TaskKind::kShortestPath:
    case TaskKind::kMaxCut: return {kAllFamilies.begin(), kAllFamilies.end()};
  }
  return {};
}

bool is_admissible(TaskKind task, GraphFamily family) {
  auto families = admissible_families(task);
  return std::find(families.begin(), families.end(), family) != families.end();
}

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> parts) {
  std::vector<std::uint32_t> words;
  words.reserve(2 * (parts.size() + 1));
  auto push = [&words](std::uint64_t x) {
    words.push_back(static_cast<std::uint32_t>(x));
    words.push_back(static_cast<std::uint32_t>(x >> 32));
  };
  push(master);
  for (std::uint64_t p : parts) push(p);
  std::seed_seq seq(words.begin(), words.end());
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

}  // namespace graphbench
