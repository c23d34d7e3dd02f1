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


#include "graphbench/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "graphbench/algorithms.hpp"
#include "graphbench/error.hpp"
#include "json.hpp"
#include "text_util.hpp"

namespace graphbench {
namespace {

using json = nlohmann::ordered_json;

// Keeps corpus streams apart from other consumers of derive_seed().
constexpr std::uint64_t kCorpusDomain = 0x636f72707573ULL;

std::size_t uniform_index(std::size_t n, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

std::pair<Node, Node> distinct_pair(std::size_t n, Rng& rng) {
  const auto u = static_cast<Node>(uniform_index(n, rng));
  auto v = static_cast<Node>(uniform_index(n - 1, rng));
  if (v >= u) ++v;
  return {u, v};
}

json truth_to_json(const GroundTruth& truth) {
  struct Visitor {
    json operator()(bool b) const { return b; }
    json operator()(const Count& c) const { return c.value; }
    json operator()(const Length& l) const { return l.value; }
    json operator()(const PathQuery& p) const {
      return json{{"source", p.source}, {"target", p.target}, {"distance", p.distance}};
    }
    json operator()(const StartNode& s) const { return json{{"start", s.start}}; }
    json operator()(const CutValue& c) const {
      json a = json::array(), b = json::array();
      for (std::size_t v = 0; v < c.side.size(); ++v) (c.side[v] ? b : a).push_back(v);
      return json{{"size", c.size}, {"partition", json::array({a, b})}};
    }
  };
  return std::visit(Visitor{}, truth);
}

GroundTruth truth_from_json(TaskKind task, const json& j, std::size_t n) {
  switch (task) {
    case TaskKind::kConnectivity:
    case TaskKind::kCycle:
    case TaskKind::kHamiltonian: return j.get<bool>();
    case TaskKind::kTriangle: return Count{j.get<std::size_t>()};
    case TaskKind::kDiameter: return Length{j.get<int>()};
    case TaskKind::kShortestPath:
      return PathQuery{j.at("source").get<Node>(), j.at("target").get<Node>(),
                       j.at("distance").get<int>()};
    case TaskKind::kBfsOrder: return StartNode{j.at("start").get<Node>()};
    case TaskKind::kMaxCut: {
      CutValue cut{j.at("size").get<std::size_t>(), std::vector<bool>(n, false)};
      const json& parts = j.at("partition");
      if (!parts.is_array() || parts.size() != 2) {
        throw Error(ErrorCode::kMalformedInput, "partition must hold two node lists");
      }
      std::size_t seen = 0;
      for (int which = 0; which < 2; ++which) {
        for (const json& v : parts[which]) {
          const auto node = v.get<std::size_t>();
          if (node >= n) throw Error(ErrorCode::kMalformedInput, "partition node out of range");
          cut.side[node] = which == 1;
          ++seen;
        }
      }
      if (seen != n) throw Error(ErrorCode::kMalformedInput, "partition does not cover every node");
      return cut;
    }
  }
  throw Error(ErrorCode::kMalformedInput, "unknown task");
}

json params_to_json(const TaskParams& p) {
  json j = json::object();
  if (p.start) j["start"] = *p.start;
  if (p.source) j["source"] = *p.source;
  if (p.target) j["target"] = *p.target;
  return j;
}

TaskParams params_from_json(const json& j) {
  TaskParams p;
  if (j.contains("start")) p.start = j.at("start").get<Node>();
  if (j.contains("source")) p.source = j.at("source").get<Node>();
  if (j.contains("target")) p.target = j.at("target").get<Node>();
  return p;
}

std::size_t parse_index_from_id(const std::string& id) {
  const auto dash = id.rfind('-');
  if (dash == std::string::npos || dash + 1 >= id.size()) {
    throw Error(ErrorCode::kMalformedInput, "id '" + id + "' has no index suffix");
  }
  std::size_t value = 0;
  for (char c : id.substr(dash + 1)) {
    if (c < '0' || c > '9') throw Error(ErrorCode::kMalformedInput, "id '" + id + "' has no index suffix");
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

}  // namespace

NodeRange task_node_range(TaskKind task, Difficulty split, const SolverLimits& limits) {
  NodeRange range = node_range(split);
  const bool exact_solver = task == TaskKind::kHamiltonian || task == TaskKind::kMaxCut;
  if (exact_solver && split == Difficulty::kHard) {
    range.min = 21;
    range.max = std::max(range.min, std::min(range.max, limits.max_nodes));
  }
  return range;
}

std::string query_id(TaskKind task, Difficulty split, GraphFamily family, std::size_t index) {
  char digits[24];
  std::snprintf(digits, sizeof digits, "%05zu", index);
  return std::string(task_name(task)) + "-" + std::string(difficulty_name(split)) + "-" +
         std::string(family_name(family)) + "-" + digits;
}

QuerySpec make_query(TaskKind task, Difficulty split, GraphFamily family, std::uint64_t seed,
                     std::size_t index, const CorpusOptions& options) {
  if (!is_admissible(task, family)) {
    throw Error(ErrorCode::kInvalidArgument, std::string(family_name(family)) +
                                                 " graphs are not used for " +
                                                 std::string(task_name(task)));
  }
  Rng rng(derive_seed(seed, {index}));
  const NodeRange range = task_node_range(task, split, options.limits);
  const bool want_hamiltonian = index % 2 == 0;

  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    const std::size_t n = std::max(sample_n(range, rng), min_nodes(family));
    Graph g = task == TaskKind::kDiameter
                  ? generate_connected(family, n, rng, options.max_attempts)
                  : generate(family, n, rng);
    TaskParams params;
    switch (task) {
      case TaskKind::kBfsOrder:
        params.start = static_cast<Node>(uniform_index(n, rng));
        break;
      case TaskKind::kConnectivity: {
        auto [u, v] = distinct_pair(n, rng);
        params.source = u;
        params.target = v;
        break;
      }
      case TaskKind::kShortestPath: {
        if (g.edge_count() == 0) continue;
        auto [u, v] = distinct_pair(n, rng);
        while (!connected(g, u, v)) std::tie(u, v) = distinct_pair(n, rng);
        params.source = u;
        params.target = v;
        break;
      }
      case TaskKind::kHamiltonian:
        if (hamiltonian_cycle(g, options.limits).has_value() != want_hamiltonian) continue;
        break;
      default:
        break;
    }
    QuerySpec q;
    q.id = query_id(task, split, family, index);
    q.task = task;
    q.difficulty = split;
    q.family = family;
    q.truth = solve(task, g, params, options.limits);
    q.graph = std::move(g);
    q.params = params;
    q.seed = seed;
    return q;
  }
  throw Error(ErrorCode::kExhaustedAttempts,
              "could not build " + query_id(task, split, family, index) + " after " +
                  std::to_string(options.max_attempts) + " attempts");
}

std::vector<QuerySpec> build_corpus(const CorpusConfig& config) {
  if (config.count == 0) throw Error(ErrorCode::kInvalidArgument, "count must be at least 1");
  std::vector<QuerySpec> corpus;
  for (TaskKind task : config.tasks) {
    std::vector<GraphFamily> families;
    for (GraphFamily f : admissible_families(task)) {
      if (config.families.empty() ||
          std::find(config.families.begin(), config.families.end(), f) != config.families.end()) {
        families.push_back(f);
      }
    }
    if (families.empty()) continue;
    for (Difficulty split : config.splits) {
      std::map<GraphFamily, std::unordered_set<std::string>> seen;
      auto add_item = [&](GraphFamily family, std::size_t index) {
        for (std::size_t attempt = 0; attempt < config.options.dedup_attempts; ++attempt) {
          const std::uint64_t seed = derive_seed(
              config.seed, {kCorpusDomain, static_cast<std::uint64_t>(task),
                            static_cast<std::uint64_t>(split), static_cast<std::uint64_t>(family),
                            index, attempt});
          QuerySpec q = make_query(task, split, family, seed, index, config.options);
          if (seen[family].insert(q.graph.canonical_key()).second) {
            corpus.push_back(std::move(q));
            return;
          }
        }
        throw Error(ErrorCode::kExhaustedAttempts,
                    "no fresh graph for " + query_id(task, split, family, index));
      };
      if (config.count_is_total) {
        for (std::size_t i = 0; i < config.count; ++i) add_item(families[i % families.size()], i);
      } else {
        for (GraphFamily family : families) {
          for (std::size_t i = 0; i < config.count; ++i) add_item(family, i);
        }
      }
    }
  }
  return corpus;
}

std::string to_jsonl(const QuerySpec& q) {
  json edges = json::array();
  for (const Edge& e : q.graph.edges()) edges.push_back(json::array({e.u, e.v}));
  json j;
  j["id"] = q.id;
  j["task"] = task_name(q.task);
  j["difficulty"] = difficulty_name(q.difficulty);
  j["graph_type"] = family_name(q.family);
  j["n"] = q.graph.node_count();
  j["edges"] = std::move(edges);
  j["params"] = params_to_json(q.params);
  j["ground_truth"] = truth_to_json(q.truth);
  j["seed"] = q.seed;
  return j.dump();
}

QuerySpec query_from_jsonl(std::string_view line) {
  try {
    const json j = json::parse(line);
    QuerySpec q;
    q.id = j.at("id").get<std::string>();
    q.task = parse_task(j.at("task").get<std::string>());
    q.difficulty = parse_difficulty(j.at("difficulty").get<std::string>());
    q.family = parse_family(j.at("graph_type").get<std::string>());
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::kMalformedInput, "edge must be [u, v]");
      edges.push_back({e[0].get<Node>(), e[1].get<Node>()});
    }
    q.graph = Graph::from_edges(n, edges);
    q.params = params_from_json(j.at("params"));
    q.truth = truth_from_json(q.task, j.at("ground_truth"), n);
    if (j.contains("seed") && !j.at("seed").is_null()) q.seed = j.at("seed").get<std::uint64_t>();
    return q;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, std::string("bad query record: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMalformedInput) throw;
    throw Error(ErrorCode::kMalformedInput, std::string("bad query record: ") + e.what());
  }
}

void write_corpus(std::ostream& out, const std::vector<QuerySpec>& corpus) {
  for (const QuerySpec& q : corpus) out << to_jsonl(q) << '\n';
}

std::vector<QuerySpec> read_corpus(std::istream& in) {
  std::vector<QuerySpec> corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    try {
      corpus.push_back(query_from_jsonl(line));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return corpus;
}

std::vector<QuerySpec> read_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return read_corpus(in);
}

Graph parse_edge_list_compact(std::string_view text) {
  std::vector<std::pair<long, long>> raw;
  std::size_t line_no = 0;
  for (const std::string& line : detail::split(text, '\n')) {
    ++line_no;
    std::string_view body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::istringstream in{std::string(body)};
    long u = -1, v = -1;
    std::string rest;
    if (!(in >> u >> v) || (in >> rest) || u < 0 || v < 0) {
      throw Error(ErrorCode::kMalformedInput,
                  "line " + std::to_string(line_no) + ": expected two non-negative ids");
    }
    raw.emplace_back(u, v);
  }
  std::vector<long> ids;
  for (auto [u, v] : raw) {
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto compact = [&ids](long id) {
    return static_cast<Node>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::set<Edge> edges;
  for (auto [u, v] : raw) {
    if (u == v) continue;  // external data: drop self-loops
    Node a = compact(u), b = compact(v);
    edges.insert(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(ids.size(), list);
}

Graph import_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list_compact(buf.str());
}

std::vector<CellStats> corpus_stats(const std::vector<QuerySpec>& corpus) {
  std::map<std::tuple<TaskKind, GraphFamily, Difficulty>, CellStats> cells;
  for (const QuerySpec& q : corpus) {
    auto& cell = cells.try_emplace({q.task, q.family, q.difficulty},
                                   CellStats{q.task, q.family, q.difficulty, 0, 0.0, 0.0})
                     .first->second;
    ++cell.count;
    cell.avg_nodes += static_cast<double>(q.graph.node_count());
    cell.avg_edges += static_cast<double>(q.graph.edge_count());
  }
  std::vector<CellStats> rows;
  for (auto& [key, cell] : cells) {
    cell.avg_nodes /= static_cast<double>(cell.count);
    cell.avg_edges /= static_cast<double>(cell.count);
    rows.push_back(cell);
  }
  return rows;
}

std::vector<SelfCheckIssue> selfcheck(std::istream& in, const CorpusOptions& options) {
  std::vector<SelfCheckIssue> issues;
  std::set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    std::string id;
    try {
      id = json::parse(line).value("id", "");
    } catch (const json::exception&) {
    }
    auto report = [&](std::string message) {
      issues.push_back({line_no, id, std::move(message)});
    };
    QuerySpec q;
    try {
      q = query_from_jsonl(line);
    } catch (const Error& e) {
      report(e.what());
      continue;
    }
    if (!ids.insert(q.id).second) report("duplicate id");
    try {
      if (!ground_truth_holds(q.task, q.graph, q.params, q.truth, options.limits)) {
        report("ground truth does not match the oracle");
        continue;
      }
    } catch (const Error& e) {
      report(std::string("oracle failed: ") + e.what());
      continue;
    }
    if (q.seed == 0) continue;  // imported item, nothing to regenerate
    try {
      const std::size_t index = parse_index_from_id(q.id);
      if (q.id != query_id(q.task, q.difficulty, q.family, index)) {
        report("id does not match task/difficulty/graph_type");
        continue;
      }
      const QuerySpec fresh = make_query(q.task, q.difficulty, q.family, q.seed, index, options);
      if (to_jsonl(fresh) != to_jsonl(q)) report("record differs from the item its seed regenerates");
    } catch (const Error& e) {
      report(std::string("regeneration failed: ") + e.what());
    }
  }
  return issues;
}

}  // namespace graphbench
