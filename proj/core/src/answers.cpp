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


#include "graphbench/answers.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include "graphbench/algorithms.hpp"
#include "graphbench/error.hpp"
#include "text_util.hpp"

namespace graphbench {
namespace detail {
extern const char* const kDefaultPatterns;
}  // namespace detail

namespace {

constexpr std::string_view kSeq =
    R"((\d+(?:(?:[ \t]*(?:,|->|→|-)[ \t]*|[ \t]+)\d+)*))";
constexpr std::string_view kNum = R"((\d+(?:\.0+)?)(?![.]?\d))";

std::string expand(std::string_view source) {
  std::string out(source);
  for (auto [key, value] : {std::pair{std::string_view("{SEQ}"), kSeq},
                            std::pair{std::string_view("{NUM}"), kNum}}) {
    for (std::size_t pos = out.find(key); pos != std::string::npos;
         pos = out.find(key, pos + value.size())) {
      out.replace(pos, key.size(), value);
    }
  }
  return out;
}

PatternKind parse_kind(std::string_view word) {
  if (word == "yes") return PatternKind::kYes;
  if (word == "no") return PatternKind::kNo;
  if (word == "value") return PatternKind::kValue;
  if (word == "partition") return PatternKind::kPartition;
  throw Error(ErrorCode::kMalformedInput, "unknown pattern kind '" + std::string(word) + "'");
}

struct Hit {
  const AnswerPattern* pattern = nullptr;
  std::smatch match;
  std::ptrdiff_t position = -1;
};

// Highest-priority group with any match; within it, the match starting last.
std::optional<Hit> last_hit(const std::vector<const AnswerPattern*>& patterns,
                            const std::string& text) {
  std::optional<Hit> best;
  std::optional<int> best_priority;
  for (const AnswerPattern* p : patterns) {
    if (best_priority && p->priority > *best_priority) break;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), p->regex);
         it != std::sregex_iterator(); ++it) {
      const std::ptrdiff_t pos = it->position(0);
      if (!best || pos > best->position) best = Hit{p, *it, pos};
      best_priority = p->priority;
    }
  }
  return best;
}

std::vector<Node> parse_ints(const std::string& text) {
  std::vector<Node> out;
  static const std::regex kInt(R"(\d+)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), kInt);
       it != std::sregex_iterator(); ++it) {
    const std::string digits = it->str();
    if (digits.size() > 9) return {};
    out.push_back(std::stoi(digits));
  }
  return out;
}

std::optional<std::int64_t> parse_number(std::string text) {
  if (auto dot = text.find('.'); dot != std::string::npos) text.resize(dot);
  if (text.empty() || text.size() > 18) return std::nullopt;
  return std::stoll(text);
}

std::optional<bool> decision(TaskKind task, const std::string& text, const PatternSet& patterns) {
  auto yes = patterns.for_task(task, PatternKind::kYes);
  auto no = patterns.for_task(task, PatternKind::kNo);
  std::vector<const AnswerPattern*> both(yes.begin(), yes.end());
  both.insert(both.end(), no.begin(), no.end());
  std::stable_sort(both.begin(), both.end(),
                   [](const AnswerPattern* a, const AnswerPattern* b) { return a->priority < b->priority; });
  auto hit = last_hit(both, text);
  if (!hit) return std::nullopt;
  return hit->pattern->kind == PatternKind::kYes;
}

std::optional<std::string> value(TaskKind task, const std::string& text, const PatternSet& patterns) {
  auto hit = last_hit(patterns.for_task(task, PatternKind::kValue), text);
  if (!hit) return std::nullopt;
  return hit->match.str(1);
}

}  // namespace

const PatternSet& PatternSet::defaults() {
  static const PatternSet set = from_text(detail::kDefaultPatterns);
  return set;
}

PatternSet PatternSet::from_text(std::string_view text) {
  PatternSet set;
  std::size_t line_no = 0;
  for (const std::string& raw : detail::split(text, '\n')) {
    ++line_no;
    std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream in{std::string(line)};
    std::string task, kind;
    int priority = 0;
    if (!(in >> task >> priority >> kind)) {
      throw Error(ErrorCode::kMalformedInput,
                  "pattern line " + std::to_string(line_no) + ": expected <task> <priority> <kind> <regex>");
    }
    std::string source;
    std::getline(in, source);
    source = std::string(detail::trim(source));
    if (source.empty()) {
      throw Error(ErrorCode::kMalformedInput, "pattern line " + std::to_string(line_no) + ": empty regex");
    }
    AnswerPattern p{parse_task(task), priority, parse_kind(kind), source, {}};
    try {
      p.regex = std::regex(expand(source), std::regex::ECMAScript | std::regex::icase);
    } catch (const std::regex_error& e) {
      throw Error(ErrorCode::kMalformedInput,
                  "pattern line " + std::to_string(line_no) + ": " + e.what());
    }
    set.patterns_.push_back(std::move(p));
  }
  std::stable_sort(set.patterns_.begin(), set.patterns_.end(),
                   [](const AnswerPattern& a, const AnswerPattern& b) { return a.priority < b.priority; });
  return set;
}

PatternSet PatternSet::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

std::vector<const AnswerPattern*> PatternSet::for_task(TaskKind task, PatternKind kind) const {
  std::vector<const AnswerPattern*> out;
  for (const AnswerPattern& p : patterns_) {
    if (p.task == task && p.kind == kind) out.push_back(&p);
  }
  return out;
}

ExtractedAnswer extract(TaskKind task, std::string_view response, const PatternSet& patterns) {
  const std::string text(response);
  switch (task) {
    case TaskKind::kConnectivity:
    case TaskKind::kCycle: {
      if (auto d = decision(task, text, patterns)) return *d;
      return NotFound{};
    }
    case TaskKind::kDiameter:
    case TaskKind::kTriangle: {
      auto v = value(task, text, patterns);
      if (!v) return NotFound{};
      if (auto n = parse_number(*v)) return Number{*n};
      return NotFound{};
    }
    case TaskKind::kBfsOrder:
    case TaskKind::kShortestPath: {
      auto v = value(task, text, patterns);
      if (!v) return NotFound{};
      auto nodes = parse_ints(*v);
      if (nodes.empty()) return NotFound{};
      return NodeSequence{std::move(nodes)};
    }
    case TaskKind::kHamiltonian: {
      auto d = decision(task, text, patterns);
      auto v = value(task, text, patterns);
      std::vector<Node> tour = v ? parse_ints(*v) : std::vector<Node>{};
      if (!d && tour.empty()) return NotFound{};
      return CycleClaim{d.value_or(true), std::move(tour)};
    }
    case TaskKind::kMaxCut: {
      auto v = value(task, text, patterns);
      if (!v) return NotFound{};
      auto size = parse_number(*v);
      if (!size) return NotFound{};
      CutClaim claim{*size, {}, {}};
      if (auto hit = last_hit(patterns.for_task(task, PatternKind::kPartition), text)) {
        claim.first = parse_ints(hit->match.str(1));
        claim.second = parse_ints(hit->match.str(2));
      }
      return claim;
    }
  }
  return NotFound{};
}

std::string describe(const ExtractedAnswer& answer) {
  struct Visitor {
    std::string operator()(const NotFound&) const { return "not-found"; }
    std::string operator()(bool b) const { return b ? "yes" : "no"; }
    std::string operator()(const Number& n) const { return std::to_string(n.value); }
    std::string operator()(const NodeSequence& s) const { return detail::join_ints(s.nodes, ","); }
    std::string operator()(const CutClaim& c) const {
      std::string out = std::to_string(c.size);
      if (!c.first.empty() || !c.second.empty()) {
        out += " {" + detail::join_ints(c.first, ",") + "}|{" + detail::join_ints(c.second, ",") + "}";
      }
      return out;
    }
    std::string operator()(const CycleClaim& c) const {
      std::string out = c.exists ? "yes" : "no";
      if (!c.tour.empty()) out += " " + detail::join_ints(c.tour, ",");
      return out;
    }
  };
  return std::visit(Visitor{}, answer);
}

bool verify_bfs_order(const Graph& g, Node s, std::span<const Node> seq) {
  if (!g.contains(s) || seq.empty() || seq.front() != s) return false;
  const std::vector<int> levels = bfs_levels(g, s);
  const auto reachable = static_cast<std::size_t>(
      std::count_if(levels.begin(), levels.end(), [](int d) { return d != kUnreachable; }));
  if (seq.size() != reachable) return false;

  std::vector<bool> visited(g.node_count(), false);
  for (Node v : seq) {
    if (!g.contains(v) || levels[v] == kUnreachable) return false;
  }
  visited[s] = true;
  std::size_t next = 1;
  std::vector<Node> expected;
  for (std::size_t head = 0; head < seq.size(); ++head) {
    if (head >= next) return false;  // queue ran dry before the sequence did
    expected.clear();
    for (Node w : g.neighbors(seq[head])) {
      if (!visited[w]) expected.push_back(w);
    }
    if (next + expected.size() > seq.size()) return false;
    std::vector<Node> block(seq.begin() + static_cast<std::ptrdiff_t>(next),
                            seq.begin() + static_cast<std::ptrdiff_t>(next + expected.size()));
    std::sort(block.begin(), block.end());
    if (block != expected) return false;  // neighbours() is ascending
    for (Node w : block) visited[w] = true;
    next += block.size();
  }
  return next == seq.size();
}

bool verify_shortest_path(const Graph& g, Node u, Node v, std::span<const Node> seq) {
  if (!g.contains(u) || !g.contains(v) || seq.empty()) return false;
  if (seq.front() != u || seq.back() != v) return false;
  std::set<Node> seen;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!g.contains(seq[i]) || !seen.insert(seq[i]).second) return false;
    if (i > 0 && !g.has_edge(seq[i - 1], seq[i])) return false;
  }
  auto d = shortest_distance(g, u, v);
  return d && static_cast<std::size_t>(*d) + 1 == seq.size();
}

bool verify_cut_claim(const Graph& g, const CutClaim& claim) {
  const std::size_t n = g.node_count();
  if (claim.first.size() + claim.second.size() != n) return false;
  std::vector<int> owner(n, -1);
  for (int which = 0; which < 2; ++which) {
    for (Node v : which == 0 ? claim.first : claim.second) {
      if (!g.contains(v) || owner[v] != -1) return false;
      owner[v] = which;
    }
  }
  std::vector<bool> side(n);
  for (std::size_t v = 0; v < n; ++v) side[v] = owner[v] == 1;
  return claim.size >= 0 && verify_cut(g, side) == static_cast<std::size_t>(claim.size);
}

int score(const QuerySpec& query, const ExtractedAnswer& answer) {
  if (std::holds_alternative<NotFound>(answer)) return 0;
  const Graph& g = query.graph;
  switch (query.task) {
    case TaskKind::kConnectivity:
    case TaskKind::kCycle: {
      const auto* b = std::get_if<bool>(&answer);
      return b != nullptr && *b == std::get<bool>(query.truth) ? 1 : 0;
    }
    case TaskKind::kDiameter: {
      const auto* n = std::get_if<Number>(&answer);
      return n != nullptr && n->value == std::get<Length>(query.truth).value ? 1 : 0;
    }
    case TaskKind::kTriangle: {
      const auto* n = std::get_if<Number>(&answer);
      return n != nullptr &&
                     n->value == static_cast<std::int64_t>(std::get<Count>(query.truth).value)
                 ? 1
                 : 0;
    }
    case TaskKind::kBfsOrder: {
      const auto* s = std::get_if<NodeSequence>(&answer);
      const Node start = std::get<StartNode>(query.truth).start;
      return s != nullptr && verify_bfs_order(g, start, s->nodes) ? 1 : 0;
    }
    case TaskKind::kShortestPath: {
      const auto* s = std::get_if<NodeSequence>(&answer);
      const auto& pq = std::get<PathQuery>(query.truth);
      return s != nullptr && verify_shortest_path(g, pq.source, pq.target, s->nodes) ? 1 : 0;
    }
    case TaskKind::kHamiltonian: {
      CycleClaim claim;
      if (const auto* c = std::get_if<CycleClaim>(&answer)) {
        claim = *c;
      } else if (const auto* b = std::get_if<bool>(&answer)) {
        claim.exists = *b;
      } else {
        return 0;
      }
      const bool truth = std::get<bool>(query.truth);
      if (claim.exists != truth) return 0;
      return !truth || is_hamiltonian_cycle(g, claim.tour) ? 1 : 0;
    }
    case TaskKind::kMaxCut: {
      const auto* c = std::get_if<CutClaim>(&answer);
      const auto& truth = std::get<CutValue>(query.truth);
      return c != nullptr && c->size == static_cast<std::int64_t>(truth.size) &&
                     verify_cut_claim(g, *c)
                 ? 1
                 : 0;
    }
  }
  return 0;
}

}  // namespace graphbench
