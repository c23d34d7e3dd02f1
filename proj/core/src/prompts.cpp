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


#include "graphbench/prompts.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "graphbench/algorithms.hpp"
#include "graphbench/answers.hpp"
#include "graphbench/corpus.hpp"
#include "graphbench/error.hpp"
#include "text_util.hpp"

namespace graphbench {
namespace {

constexpr std::uint64_t kExemplarDomain = 0x6578656d706c6172ULL;

std::string node(Node v) { return "node " + std::to_string(v); }

std::string nodes_phrase(const std::vector<Node>& nodes) {
  return detail::join_ints(nodes, ", ");
}

// --- reasoning narrations ----------------------------------------------------

std::string bfs_trace(const Graph& g, Node s) {
  std::vector<bool> seen(g.node_count(), false);
  std::vector<Node> queue{s};
  seen[s] = true;
  std::string out = "Enqueue " + node(s) + " and mark it visited.";
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Node u = queue[head];
    std::vector<Node> fresh;
    for (Node w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        fresh.push_back(w);
        queue.push_back(w);
      }
    }
    out += " Dequeue " + node(u) + ".";
    if (fresh.empty()) {
      out += " It has no unvisited neighbors.";
    } else {
      out += " Its unvisited neighbors are " + nodes_phrase(fresh) + ", so enqueue them.";
    }
  }
  out += " The queue is empty, so the traversal ends.";
  return out;
}

std::string bfs_levels_text(const Graph& g, Node s) {
  const std::vector<int> levels = bfs_levels(g, s);
  const int depth = *std::max_element(levels.begin(), levels.end());
  std::string out = "Start at " + node(s) + " and visit the graph level by level.";
  for (int d = 1; d <= depth; ++d) {
    std::vector<Node> layer;
    for (std::size_t v = 0; v < levels.size(); ++v) {
      if (levels[v] == d) layer.push_back(static_cast<Node>(v));
    }
    out += " Level " + std::to_string(d) + " holds " + nodes_phrase(layer) + ".";
  }
  return out;
}

std::vector<Node> reachable_from(const Graph& g, Node s) {
  std::vector<Node> out;
  const std::vector<int> levels = bfs_levels(g, s);
  for (std::size_t v = 0; v < levels.size(); ++v) {
    if (levels[v] != kUnreachable) out.push_back(static_cast<Node>(v));
  }
  return out;
}

std::string edge_listing(const Graph& g) {
  std::string out = "Let's construct a graph with the nodes and edges first. The graph has " +
                    std::to_string(g.node_count()) + " nodes, numbered 0 to " +
                    std::to_string(g.node_count() == 0 ? 0 : g.node_count() - 1) + ".";
  if (g.edge_count() == 0) return out + " It has no edges.";
  out += " Its edges are " +
         detail::join(g.edges(), ", ",
                      [](const Edge& e) {
                        return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
                      }) +
         ".";
  return out;
}

std::string reasoning(const QuerySpec& q, bool trace) {
  const Graph& g = q.graph;
  switch (q.task) {
    case TaskKind::kBfsOrder: {
      const Node s = std::get<StartNode>(q.truth).start;
      return trace ? bfs_trace(g, s) : bfs_levels_text(g, s);
    }
    case TaskKind::kConnectivity: {
      const Node u = *q.params.source, v = *q.params.target;
      const bool yes = std::get<bool>(q.truth);
      return "Start a BFS at " + node(u) + ". It reaches nodes " + nodes_phrase(reachable_from(g, u)) +
             ". " + (yes ? "Node " + std::to_string(v) + " is among them."
                         : "Node " + std::to_string(v) + " is not among them.");
    }
    case TaskKind::kCycle: {
      const std::size_t n = g.node_count(), m = g.edge_count(), c = component_count(g);
      std::string out = "The graph has " + std::to_string(n) + " nodes, " + std::to_string(m) +
                        " edges and " + std::to_string(c) + " connected components.";
      out += " A graph without cycles on these components has exactly " + std::to_string(n - c) +
             " edges.";
      out += m > n - c ? " There are more edges than that, so a DFS must meet a visited node again."
                       : " The edge count matches, so every component is a tree.";
      return out;
    }
    case TaskKind::kDiameter: {
      std::string out = trace ? "Run BFS from every node and record its eccentricity."
                              : "Compute the longest shortest path from each node.";
      for (std::size_t v = 0; v < g.node_count(); ++v) {
        const std::vector<int> levels = bfs_levels(g, static_cast<Node>(v));
        out += " Node " + std::to_string(v) + ": " +
               std::to_string(*std::max_element(levels.begin(), levels.end())) + ".";
      }
      out += " The largest value is " + std::to_string(std::get<Length>(q.truth).value) + ".";
      return out;
    }
    case TaskKind::kShortestPath: {
      const auto& pq = std::get<PathQuery>(q.truth);
      return "BFS from " + node(pq.source) + " first reaches " + node(pq.target) + " at distance " +
             std::to_string(pq.distance) + ". Walking back along the BFS parents gives the route.";
    }
    case TaskKind::kTriangle: {
      std::vector<std::string> found;
      for (const Edge& e : g.edges()) {
        for (Node w : g.neighbors(e.v)) {
          if (w > e.v && g.has_edge(e.u, w)) {
            found.push_back("(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ", " +
                            std::to_string(w) + ")");
          }
        }
      }
      std::string out = trace ? "For every edge (u, v), look for common neighbors w greater than v."
                              : "Check which triples of nodes are pairwise connected.";
      out += found.empty() ? " No such triple exists."
                           : " The triangles are " + detail::join(found, ", ", [](const std::string& s) { return s; }) + ".";
      return out;
    }
    case TaskKind::kHamiltonian: {
      const std::string n = std::to_string(g.node_count());
      return std::get<bool>(q.truth)
                 ? "Backtracking from node 0 extends a path through all " + n +
                       " nodes whose last node is adjacent to node 0."
                 : "Backtracking from node 0 cannot extend any path through all " + n +
                       " nodes and back to node 0.";
    }
    case TaskKind::kMaxCut: {
      const auto& cut = std::get<CutValue>(q.truth);
      return "Try every split of the " + std::to_string(g.node_count()) +
             " nodes into two groups and count the edges between the groups. The best split cuts " +
             std::to_string(cut.size) + " of the " + std::to_string(g.edge_count()) + " edges.";
    }
  }
  return {};
}

std::string terse_answer(const QuerySpec& q) {
  switch (q.task) {
    case TaskKind::kBfsOrder: {
      const Node s = std::get<StartNode>(q.truth).start;
      return "The BFS traversal order starting from node " + std::to_string(s) + " is " +
             detail::join_ints(bfs_order(q.graph, s), ",");
    }
    case TaskKind::kConnectivity: {
      const std::string pair =
          "between node " + std::to_string(*q.params.source) + " and node " + std::to_string(*q.params.target) + ".";
      return std::get<bool>(q.truth) ? "Yes, there is a path " + pair : "No, there is no path " + pair;
    }
    case TaskKind::kCycle:
      return std::get<bool>(q.truth) ? "Yes, there is a cycle in this graph."
                                     : "No, there is no cycle in this graph.";
    case TaskKind::kDiameter:
      return "So the diameter is " + std::to_string(std::get<Length>(q.truth).value) + ".";
    case TaskKind::kShortestPath: {
      const auto& pq = std::get<PathQuery>(q.truth);
      return "The shortest path from node " + std::to_string(pq.source) + " to node " +
             std::to_string(pq.target) + " is " +
             detail::join_ints(*shortest_path(q.graph, pq.source, pq.target), ",") + ".";
    }
    case TaskKind::kTriangle:
      return "So the number of triangles is " + std::to_string(std::get<Count>(q.truth).value) + ".";
    case TaskKind::kHamiltonian: {
      if (!std::get<bool>(q.truth)) return "No, there is no Hamiltonian cycle in this graph.";
      std::vector<Node> tour = *hamiltonian_cycle(q.graph);
      tour.push_back(tour.front());
      return "Yes, there is a Hamiltonian cycle in this graph. The Hamiltonian cycle is " +
             detail::join_ints(tour, ",") + ".";
    }
    case TaskKind::kMaxCut: {
      const auto& cut = std::get<CutValue>(q.truth);
      std::vector<Node> a, b;
      for (std::size_t v = 0; v < cut.side.size(); ++v) (cut.side[v] ? b : a).push_back(static_cast<Node>(v));
      return "The maximum cut size is " + std::to_string(cut.size) + ", with partition {" +
             nodes_phrase(a) + "} and {" + nodes_phrase(b) + "}.";
    }
  }
  return {};
}

std::string_view suffix_text(PromptScheme scheme) {
  switch (scheme) {
    case PromptScheme::kZeroCoT:
    case PromptScheme::kCoT: return "Let's think step by step:";
    case PromptScheme::kLTM: return "Let's break down this problem:";
    case PromptScheme::kZeroInstruct:
    case PromptScheme::kInstruct: return "Let's construct a graph with the nodes and edges first:";
    default: return {};
  }
}

bool has_algorithm_block(PromptScheme scheme) {
  return scheme == PromptScheme::kZeroAlgorithm || scheme == PromptScheme::kAlgorithm;
}

// --- segments ------------------------------------------------------------------

enum class Seg { kProse, kGraph, kJoin, kQaSep, kRaw };

struct Segment {
  Seg kind;
  std::string text;
};

void append_item(std::vector<Segment>& out, const QuerySpec& q, SerializationFormat format,
                 const SerializeOptions& options, const std::string* answer, std::string* graph_text) {
  std::string graph = serialize(q.graph, format, options);
  if (graph_text != nullptr) *graph_text = graph;
  out.push_back({Seg::kProse, framing_text(q.task, q.params)});
  out.push_back({Seg::kJoin, " "});
  out.push_back({Seg::kProse, "And the graph representation of: " +
                                  std::string(format_display_name(format)) + " is"});
  out.push_back({Seg::kRaw, " \n"});
  out.push_back({Seg::kGraph, std::move(graph)});
  out.push_back({Seg::kJoin, "\n\n"});
  out.push_back({Seg::kProse, "Q"});
  out.push_back({Seg::kQaSep, ": "});
  out.push_back({Seg::kProse, question_text(q.task, q.params)});
  out.push_back({Seg::kJoin, "\n\n"});
  out.push_back({Seg::kProse, "A"});
  if (answer != nullptr) {
    out.push_back({Seg::kQaSep, ": "});
    out.push_back({Seg::kProse, *answer});
  } else {
    out.push_back({Seg::kQaSep, ":"});
  }
}

std::string render(const std::vector<Segment>& segments, const DecorationFactors& deco) {
  std::string out;
  for (const Segment& s : segments) {
    switch (s.kind) {
      case Seg::kGraph:
      case Seg::kRaw: out += s.text; break;
      case Seg::kJoin: out += deco.sentence_separator.value_or(s.text); break;
      case Seg::kQaSep: out += deco.qa_separator.value_or(s.text); break;
      case Seg::kProse: {
        std::string text = apply_case(s.text, deco.case_style);
        if (deco.word_separator && *deco.word_separator != " ") {
          std::string spaced;
          for (char c : text) {
            if (c == ' ') {
              spaced += *deco.word_separator;
            } else {
              spaced += c;
            }
          }
          text = std::move(spaced);
        }
        out += text;
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::string_view scheme_name(PromptScheme scheme) {
  switch (scheme) {
    case PromptScheme::kZeroShot: return "0-shot";
    case PromptScheme::kZeroCoT: return "0-CoT";
    case PromptScheme::kZeroInstruct: return "0-Instruct";
    case PromptScheme::kZeroAlgorithm: return "0-Algorithm";
    case PromptScheme::kLTM: return "LTM";
    case PromptScheme::kKShot: return "k-shot";
    case PromptScheme::kCoT: return "CoT";
    case PromptScheme::kInstruct: return "Instruct";
    case PromptScheme::kAlgorithm: return "Algorithm";
  }
  return "unknown";
}

PromptScheme parse_scheme(std::string_view name) {
  const std::string key = detail::normalize_key(name);
  for (PromptScheme s : kAllSchemes) {
    if (key == detail::normalize_key(scheme_name(s))) return s;
  }
  if (key == "zero-shot" || key == "0shot") return PromptScheme::kZeroShot;
  if (key == "kshot") return PromptScheme::kKShot;
  throw Error(ErrorCode::kInvalidArgument, "unknown prompt scheme '" + std::string(name) + "'");
}

std::optional<AnswerStyle> exemplar_style(PromptScheme scheme) {
  switch (scheme) {
    case PromptScheme::kKShot: return AnswerStyle::kTerse;
    case PromptScheme::kCoT: return AnswerStyle::kCoT;
    case PromptScheme::kInstruct: return AnswerStyle::kInstruct;
    case PromptScheme::kAlgorithm: return AnswerStyle::kAlgorithm;
    default: return std::nullopt;
  }
}

PromptScheme zero_shot_counterpart(PromptScheme scheme) {
  switch (scheme) {
    case PromptScheme::kKShot: return PromptScheme::kZeroShot;
    case PromptScheme::kCoT: return PromptScheme::kZeroCoT;
    case PromptScheme::kInstruct: return PromptScheme::kZeroInstruct;
    case PromptScheme::kAlgorithm: return PromptScheme::kZeroAlgorithm;
    case PromptScheme::kZeroShot: return PromptScheme::kKShot;
    case PromptScheme::kZeroCoT: return PromptScheme::kCoT;
    case PromptScheme::kZeroInstruct: return PromptScheme::kInstruct;
    case PromptScheme::kZeroAlgorithm: return PromptScheme::kAlgorithm;
    case PromptScheme::kLTM: return PromptScheme::kLTM;
  }
  return scheme;
}

std::string question_text(TaskKind task, const TaskParams& params) {
  auto need = [&](const std::optional<Node>& v, const char* what) {
    if (!v) throw Error(ErrorCode::kMissingParam, std::string(task_name(task)) + " needs a " + what);
    return std::to_string(*v);
  };
  switch (task) {
    case TaskKind::kBfsOrder:
      return "Give the bfs traversal order starting from node " + need(params.start, "start node") + ".";
    case TaskKind::kConnectivity:
      return "Is there a path between node " + need(params.source, "source node") + " and node " +
             need(params.target, "target node") + "?";
    case TaskKind::kCycle: return "Is there a cycle in this graph?";
    case TaskKind::kDiameter: return "What is the diameter of this graph?";
    case TaskKind::kShortestPath:
      return "Give the shortest path from node " + need(params.source, "source node") + " to node " +
             need(params.target, "target node") + ".";
    case TaskKind::kTriangle: return "How many triangles are in this graph?";
    case TaskKind::kHamiltonian: return "Is there a Hamiltonian cycle in this graph?";
    case TaskKind::kMaxCut:
      return "What is the maximum cut size of this graph, and what is the corresponding bipartition?";
  }
  return {};
}

std::string framing_text(TaskKind task, const TaskParams& params) {
  switch (task) {
    case TaskKind::kBfsOrder:
      if (!params.start) throw Error(ErrorCode::kMissingParam, "bfs-order needs a start node");
      return "Given a graph, your task is to determine the bfs traversal order of this graph starting at node " +
             std::to_string(*params.start) + ".";
    case TaskKind::kConnectivity: return "Determine if there is a path between two nodes in the graph.";
    case TaskKind::kCycle:
      return "Given a graph representation, your task is to determine whether the graph has a cycle.";
    case TaskKind::kDiameter: return "Given a graph, your task is to determine the diameter of this graph.";
    case TaskKind::kShortestPath:
      return "Given a graph representation, your task is to compute shortest path between the specified two nodes.";
    case TaskKind::kTriangle: return "Given a graph, your task is to determine how many triangles in this graph.";
    case TaskKind::kHamiltonian:
      return "Given a graph, your task is to determine whether this graph has a Hamiltonian cycle.";
    case TaskKind::kMaxCut:
      return "Given a graph, your task is to determine the maximum cut of this graph.";
  }
  return {};
}

std::string_view algorithm_text(TaskKind task) {
  switch (task) {
    case TaskKind::kBfsOrder:
      return "To determine the BFS (Breadth-First Search) traversal order, you need to follow these steps:\n"
             "1. Initialize: Start by choosing a starting node and enqueue it into a queue.\n"
             "2. Mark visited: Mark the starting node as visited to avoid reprocessing.\n"
             "3. Traverse: While the queue is not empty: Dequeue a node and add it to the traversal order. "
             "For each unvisited neighboring node of the dequeued node, enqueue it and mark it as visited.\n"
             "4.Continue the process until all reachable nodes are visited.";
    case TaskKind::kConnectivity:
      return "To determine if there is a path between two nodes in an undirected graph, we can use a "
             "Breadth-First Search (BFS) algorithm.\n"
             "BFS is an algorithm that starts at one node and explores all of its neighbors before moving "
             "on to the next level of neighbors.\n"
             "By exploring each node in the graph, the algorithm can determine if there is a path between "
             "two nodes.";
    case TaskKind::kCycle:
      return "To determine whether or not there is a cycle in an undirected graph, you can use a "
             "depth-first search algorithm to traverse the graph.\n"
             "If the algorithm ever returns to a node it has already visited, then it has detected a cycle "
             "in the graph.";
    case TaskKind::kDiameter:
      return "To calculate the diameter of the graph, you can use BFS based on the following tips\n"
             "1. identify all nodes in the graph.\n"
             "2. For each node in the graph , perform BFS to compute the shortest path from that node to "
             "all other nodes.\n"
             "3. calculate the shortest path from node u to all other nodes.\n"
             "4. Find the longest shortest path.\n"
             "5. Repeat the process and update the diameter of the graph.\n"
             "6. Return the diameter of the graph.";
    case TaskKind::kShortestPath:
      return "We can use a Depth-First Search (DFS) algorithm to find the shortest path between two given "
             "nodes in an undirected graph.\n"
             "The basic idea is to start at one of the nodes and use DFS to explore all of its adjacent "
             "nodes. At each node, you can keep track of the distance it takes to reach that node from the "
             "starting node.\n"
             "Once you have explored all the adjacent nodes, you can backtrack and pick the node which has "
             "the shortest distance to reach the destination node.";
    case TaskKind::kTriangle:
      return "To count the triangles in an undirected graph, you can look at every edge (u, v) and the "
             "neighbors that u and v have in common.\n"
             "Each common neighbor w closes a triangle u, v, w.\n"
             "Every triangle is found once for each of its three edges, so divide the total by three.";
    case TaskKind::kHamiltonian:
      return "To determine whether an undirected graph has a Hamiltonian cycle, you can use backtracking.\n"
             "Start at one node and extend a path by moving to an unvisited neighbor, undoing the last step "
             "whenever no unvisited neighbor is left.\n"
             "If the path visits every node exactly once and its last node is adjacent to the first, it "
             "closes a Hamiltonian cycle.";
    case TaskKind::kMaxCut:
      return "To find the maximum cut of an undirected graph, you can consider every way of splitting the "
             "nodes into two groups.\n"
             "For each split, count the edges whose endpoints lie in different groups.\n"
             "The largest count is the maximum cut size, and the split that reaches it is the corresponding "
             "bipartition.";
  }
  return {};
}

std::string answer_text(const QuerySpec& query, AnswerStyle style) {
  switch (style) {
    case AnswerStyle::kTerse: return terse_answer(query);
    case AnswerStyle::kCoT: return reasoning(query, false) + " " + terse_answer(query);
    case AnswerStyle::kInstruct:
      return edge_listing(query.graph) + " " + reasoning(query, false) + " " + terse_answer(query);
    case AnswerStyle::kAlgorithm: return reasoning(query, true) + " " + terse_answer(query);
  }
  return {};
}

std::string_view case_style_name(CaseStyle style) {
  switch (style) {
    case CaseStyle::kNoChange: return "none";
    case CaseStyle::kTitle: return "title";
    case CaseStyle::kUpper: return "upper";
    case CaseStyle::kLower: return "lower";
  }
  return "none";
}

std::string apply_case(std::string_view text, CaseStyle style) {
  switch (style) {
    case CaseStyle::kNoChange: return std::string(text);
    case CaseStyle::kUpper: return detail::to_upper(text);
    case CaseStyle::kLower: return detail::to_lower(text);
    case CaseStyle::kTitle: {
      std::string out(text);
      bool previous_cased = false;
      for (char& c : out) {
        const auto uc = static_cast<unsigned char>(c);
        if (std::isalpha(uc)) {
          c = static_cast<char>(previous_cased ? std::tolower(uc) : std::toupper(uc));
          previous_cased = true;
        } else {
          previous_cased = false;
        }
      }
      return out;
    }
  }
  return std::string(text);
}

std::vector<Exemplar> build_exemplars(TaskKind task, AnswerStyle style, std::size_t k,
                                      std::uint64_t seed) {
  const std::vector<GraphFamily> families = admissible_families(task);
  std::vector<Exemplar> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t item_seed = derive_seed(
        seed, {kExemplarDomain, static_cast<std::uint64_t>(task), static_cast<std::uint64_t>(style), i});
    const GraphFamily family = families[item_seed % families.size()];
    QuerySpec q = make_query(task, Difficulty::kEasy, family, item_seed, i);
    q.id = "exemplar-" + std::string(task_name(task)) + "-" + std::to_string(i);
    std::string answer = answer_text(q, style);
    if (score(q, extract(task, answer)) != 1) {
      throw Error(ErrorCode::kInvalidGraph,
                  "exemplar answer failed its own check: " + q.id + ": " + answer);
    }
    out.push_back({std::move(q), std::move(answer)});
  }
  return out;
}

ExemplarBank ExemplarBank::build(std::uint64_t seed, std::size_t k) {
  ExemplarBank bank;
  for (TaskKind task : kAllTasks) {
    for (AnswerStyle style : kAllAnswerStyles) bank.set(task, style, build_exemplars(task, style, k, seed));
  }
  return bank;
}

void ExemplarBank::set(TaskKind task, AnswerStyle style, std::vector<Exemplar> exemplars) {
  exemplars_[{task, style}] = std::move(exemplars);
}

const std::vector<Exemplar>& ExemplarBank::get(TaskKind task, AnswerStyle style) const {
  static const std::vector<Exemplar> kEmpty;
  auto it = exemplars_.find({task, style});
  return it == exemplars_.end() ? kEmpty : it->second;
}

RenderedPrompt compose_prompt(const QuerySpec& query, PromptScheme scheme, SerializationFormat format,
                              const ExemplarBank& bank, const DecorationFactors& decoration,
                              const SerializeOptions& serialize_options) {
  std::vector<Segment> segments;
  if (has_algorithm_block(scheme)) {
    segments.push_back({Seg::kProse, std::string(algorithm_text(query.task))});
    segments.push_back({Seg::kJoin, "\n\n"});
  }
  if (auto style = exemplar_style(scheme)) {
    const std::vector<Exemplar>& shots = bank.get(query.task, *style);
    if (shots.empty()) {
      throw Error(ErrorCode::kEmptyBank, "no " + std::string(scheme_name(scheme)) + " exemplars for " +
                                             std::string(task_name(query.task)));
    }
    for (const Exemplar& shot : shots) {
      append_item(segments, shot.query, format, serialize_options, &shot.answer, nullptr);
      segments.push_back({Seg::kJoin, "\n\n"});
    }
  }
  RenderedPrompt prompt{{}, {}, scheme, format};
  append_item(segments, query, format, serialize_options, nullptr, &prompt.graph_text);
  if (std::string_view suffix = suffix_text(scheme); !suffix.empty()) {
    segments.push_back({Seg::kJoin, " \n\n"});
    segments.push_back({Seg::kProse, std::string(suffix)});
  }
  prompt.text = render(segments, decoration);
  return prompt;
}

}  // namespace graphbench
