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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphbench/algorithms.hpp"
#include "graphbench/answers.hpp"
#include "graphbench/baselines.hpp"
#include "graphbench/corpus.hpp"
#include "graphbench/gateway.hpp"
#include "graphbench/generators.hpp"
#include "graphbench/pipeline.hpp"
#include "graphbench/reporting.hpp"
#include "graphbench/rl_opt.hpp"
#include "graphbench/serializers.hpp"
#include "oracles.hpp"

namespace gb = graphbench;
namespace fs = std::filesystem;
using F = gb::SerializationFormat;
using json = nlohmann::json;

namespace {

const fs::path kData = GRAPHBENCH_TEST_DATA;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failure notes; the first few are kept for the report line.
struct Check {
  bool ok = true;
  std::vector<std::string> notes;
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (notes.size() < 4) notes.push_back(what);
  }
  Outcome done(std::string summary) const {
    for (const auto& n : notes) summary += "; " + n;
    return {ok, summary};
  }
};

std::string fmt(double v, int digits = 4) {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << v;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// "{1: [0], 0: [1, 2]}" as printed by Python.
gb::Graph parse_dict_adjacency(const std::string& text) {
  const std::regex entry(R"((\d+): \[([\d, ]*)\])");
  std::vector<gb::Edge> edges;
  int max_id = -1;
  for (std::sregex_iterator it(text.begin(), text.end(), entry), end; it != end; ++it) {
    const int u = std::stoi((*it)[1]);
    max_id = std::max(max_id, u);
    std::istringstream list(std::regex_replace((*it)[2].str(), std::regex(","), " "));
    for (int v; list >> v;) {
      max_id = std::max(max_id, v);
      if (u < v) edges.push_back({u, v});
    }
  }
  return gb::Graph::from_edges(static_cast<std::size_t>(max_id + 1), edges);
}

// numpy-style "[[0 1]\n [1 0]]", blank lines allowed between rows.
gb::Graph parse_bracket_matrix(const std::string& text) {
  const std::regex row(R"(\[([01 ]+)\])");
  std::vector<std::vector<int>> rows;
  for (std::sregex_iterator it(text.begin(), text.end(), row), end; it != end; ++it) {
    std::istringstream cells((*it)[1].str());
    rows.emplace_back();
    for (int x; cells >> x;) rows.back().push_back(x);
  }
  std::vector<gb::Edge> edges;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows[i].size(); ++j) {
      if (rows[i][j]) edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return gb::Graph::from_edges(rows.size(), edges);
}

std::vector<std::string> regex_elements(const std::string& text, const std::regex& re) {
  std::vector<std::string> out;
  for (std::sregex_iterator it(text.begin(), text.end(), re), end; it != end; ++it) out.push_back(it->str());
  std::sort(out.begin(), out.end());
  return out;
}

// --- 1 ---------------------------------------------------------------------------

Outcome serializer_goldens() {
  const auto t0 = std::chrono::steady_clock::now();
  const gb::Graph g = gb::Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  auto golden = [](F f) { return oracle::read_file(kData / "six_node" / (std::string(gb::format_id(f)) + ".txt")); };
  Check c;
  for (F f : {F::kAdjacencyMatrix, F::kAdjacencyList, F::kEdgeList, F::kGMoL, F::kGMaL}) {
    c.expect(gb::serialize(g, f) == golden(f), std::string(gb::format_id(f)) + " differs");
  }
  const std::regex pair(R"(\(\d+, \d+\))"), entry(R"(\d+: \{[\d, ]*\})");
  c.expect(regex_elements(gb::serialize(g, F::kEdgeSet), pair) == regex_elements(golden(F::kEdgeSet), pair),
           "edge-set elements differ");
  c.expect(regex_elements(gb::serialize(g, F::kAdjacencySet), entry) ==
               regex_elements(golden(F::kAdjacencySet), entry),
           "adjacency-set elements differ");
  const double secs = seconds_since(t0);
  c.expect(secs < 1.0, "took " + fmt(secs) + " s");
  return c.done("7 renderings checked in " + fmt(secs) + " s");
}

// --- 2 ---------------------------------------------------------------------------

Outcome oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2);
  Check c;
  std::size_t graphs = 0, diameters = 0;
  // Keep drawing until 500 connected graphs have exercised diameter too.
  for (; graphs < 500 || diameters < 500; ++graphs) {
    const std::size_t n = 1 + graphs % 12;
    const double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    const gb::Graph g = oracle::random_graph(n, p, rng);
    c.expect(gb::triangle_count(g) == oracle::triangles(g), "triangle mismatch on graph " + std::to_string(graphs));
    if (auto d = oracle::diameter(g)) {
      ++diameters;
      c.expect(gb::diameter(g) == *d, "diameter mismatch on graph " + std::to_string(graphs));
    }
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 30.0, "took " + fmt(secs) + " s");
  return c.done(std::to_string(graphs) + " graphs, " + std::to_string(diameters) + " diameters, " + fmt(secs, 2) +
                " s");
}

// --- 3 ---------------------------------------------------------------------------

Outcome bfs_verifier() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(3);
  Check c;
  std::size_t mutants = 0, graphs = 0;
  for (; graphs < 220; ++graphs) {
    const std::size_t n = 2 + graphs % 7;
    const gb::Graph g = oracle::random_graph(n, std::uniform_real_distribution<double>(0.2, 0.8)(rng), rng);
    const int s = static_cast<int>(rng() % n);
    const auto expected = oracle::bfs_orders(g, s);

    std::vector<int> reach;
    for (int v = 0; v < static_cast<int>(n); ++v) {
      if (v != s && oracle::connected(g, s, v)) reach.push_back(v);
    }
    std::set<std::vector<int>> accepted;
    do {
      std::vector<int> seq{s};
      seq.insert(seq.end(), reach.begin(), reach.end());
      if (gb::verify_bfs_order(g, s, seq)) accepted.insert(seq);
    } while (std::next_permutation(reach.begin(), reach.end()));
    c.expect(accepted == expected, "accepted set differs on graph " + std::to_string(graphs));

    const auto levels = gb::bfs_levels(g, s);
    for (const auto& order : expected) {
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
          if (levels[order[i]] == levels[order[j]]) continue;
          auto m = order;
          std::swap(m[i], m[j]);
          ++mutants;
          c.expect(!gb::verify_bfs_order(g, s, m), "level-changing mutant accepted");
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 60.0, "took " + fmt(secs) + " s");
  return c.done(std::to_string(graphs) + " graphs, " + std::to_string(mutants) + " mutants rejected, " +
                fmt(secs, 2) + " s");
}

// --- 4 ---------------------------------------------------------------------------

Outcome regression_cases() {
  Check c;
  const gb::Graph tri = parse_dict_adjacency(oracle::read_file(kData / "regression" / "triangle_adjacency.txt"));
  c.expect(tri.node_count() == 9 && tri.edge_count() == 10, "triangle graph parsed wrong");
  c.expect(gb::triangle_count(tri) == 2, "triangle count " + std::to_string(gb::triangle_count(tri)));

  const gb::Graph dia = parse_bracket_matrix(oracle::read_file(kData / "regression" / "diameter_matrix.txt"));
  c.expect(dia.node_count() == 9 && dia.edge_count() == 35, "diameter matrix parsed wrong");
  c.expect(gb::diameter(dia) == 2, "diameter " + std::to_string(gb::diameter(dia)));

  const gb::Graph baf =
      gb::Graph::from_edges(11, {{2, 3}, {1, 4}, {2, 5}, {5, 6}, {0, 7}, {2, 8}, {7, 9}, {3, 10}});
  const std::vector<gb::Node> bfs = {7, 0, 9};
  c.expect(gb::verify_bfs_order(baf, 7, bfs), "BFS [7,0,9] rejected");
  gb::QuerySpec bq;
  bq.task = gb::TaskKind::kBfsOrder;
  bq.graph = baf;
  bq.params.start = 7;
  bq.truth = gb::solve(bq.task, baf, bq.params);
  c.expect(gb::score(bq, gb::NodeSequence{bfs}) == 1, "BFS [7,0,9] scored 0");

  const gb::Graph star = parse_dict_adjacency(oracle::read_file(kData / "regression" / "star_adjacency.txt"));
  const std::vector<gb::Node> path = {5, 0, 8};
  c.expect(gb::verify_shortest_path(star, 5, 8, path), "path [5,0,8] rejected");
  gb::QuerySpec sq;
  sq.task = gb::TaskKind::kShortestPath;
  sq.graph = star;
  sq.params.source = 5;
  sq.params.target = 8;
  sq.truth = gb::solve(sq.task, star, sq.params);
  c.expect(gb::score(sq, gb::NodeSequence{path}) == 1, "path [5,0,8] scored 0");
  return c.done("triangles=" + std::to_string(gb::triangle_count(tri)) + " diameter=" +
                std::to_string(gb::diameter(dia)) + " bfs/path accepted");
}

// --- 5 ---------------------------------------------------------------------------

std::vector<gb::QuerySpec> corpus(std::vector<gb::TaskKind> tasks, std::vector<gb::Difficulty> splits,
                                  std::size_t count, std::uint64_t seed, std::vector<gb::GraphFamily> families = {}) {
  gb::CorpusConfig cfg;
  cfg.tasks = std::move(tasks);
  cfg.splits = std::move(splits);
  cfg.families = std::move(families);
  cfg.count = count;
  cfg.seed = seed;
  return gb::build_corpus(cfg);
}

Outcome random_baselines() {
  Check c;
  using T = gb::TaskKind;
  for (T t : {T::kCycle, T::kConnectivity}) {
    auto items = corpus({t}, {gb::Difficulty::kEasy, gb::Difficulty::kMedium}, 20, 5);
    double trues = 0;
    for (const auto& q : items) trues += std::get<bool>(q.truth);
    c.expect(gb::random_baseline(items, gb::BaselineMode::kAnalytic) == trues / static_cast<double>(items.size()),
             std::string(gb::task_name(t)) + " baseline != True fraction");
  }
  std::string mc_note;
  for (T t : {T::kDiameter, T::kTriangle}) {
    auto items = corpus({t}, {gb::Difficulty::kEasy}, 20, 6);
    const double p = gb::random_baseline(items, gb::BaselineMode::kAnalytic);
    gb::BaselineConfig cfg;
    cfg.trials = 10000;
    cfg.seed = 11;
    const double mc = gb::random_baseline(items, gb::BaselineMode::kMonteCarlo, cfg);
    const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(cfg.trials));
    c.expect(std::abs(mc - p) <= 4 * sigma, std::string(gb::task_name(t)) + " Monte Carlo off by " +
                                                fmt(std::abs(mc - p) / sigma, 2) + " sigma");
    mc_note += std::string(gb::task_name(t)) + " " + fmt(mc) + " vs " + fmt(p) + ", ";
  }
  auto bfs = corpus({T::kBfsOrder}, {gb::Difficulty::kEasy}, 5, 7);
  c.expect(gb::random_baseline(bfs, gb::BaselineMode::kAnalytic) == 0.0, "BFS baseline nonzero");

  gb::CorpusConfig defaults;
  defaults.tasks = {T::kDiameter};
  defaults.splits = {gb::Difficulty::kEasy};
  const double easy = gb::random_baseline(gb::build_corpus(defaults), gb::BaselineMode::kAnalytic);
  c.expect(easy >= 0.08 && easy <= 0.15, "Easy diameter baseline " + fmt(easy));
  return c.done(mc_note + "Easy diameter " + fmt(easy));
}

// --- 6 ---------------------------------------------------------------------------

Outcome generator_structure() {
  Check c;
  using T = gb::TaskKind;
  using G = gb::GraphFamily;
  const std::vector<gb::Difficulty> all(gb::kAllDifficulties.begin(), gb::kAllDifficulties.end());
  std::size_t checked = 0;
  for (const auto& q : corpus({T::kBfsOrder, T::kConnectivity}, all, 50, 21, {G::kBAF})) {
    ++checked;
    c.expect(!oracle::has_cycle(q.graph), q.id + " has a cycle");
  }
  for (const auto& q : corpus({T::kBfsOrder, T::kCycle}, all, 50, 22, {G::kBAG})) {
    ++checked;
    c.expect(oracle::all_connected(q.graph), q.id + " is disconnected");
  }
  for (const auto& q : corpus({T::kBfsOrder, T::kConnectivity, T::kCycle}, all, 50, 23, {G::kBERM, G::kBERP})) {
    ++checked;
    c.expect(oracle::two_colorable(q.graph), q.id + " is not bipartite");
  }
  double bag = 0, erp = 0;
  const int samples = 1000;
  for (int i = 0; i < samples; ++i) {
    const auto seed = gb::derive_seed(24, {static_cast<std::uint64_t>(i)});
    gb::Rng a(seed), b(seed);
    bag += static_cast<double>(oracle::max_degree(gb::generate(G::kBAG, 30, a)));
    erp += static_cast<double>(oracle::max_degree(gb::generate(G::kERP, 30, b)));
  }
  bag /= samples;
  erp /= samples;
  c.expect(bag >= 16 && bag <= 23, "BAG mean max degree " + fmt(bag, 2));
  c.expect(bag > erp, "BAG " + fmt(bag, 2) + " <= ERP " + fmt(erp, 2));
  return c.done(std::to_string(checked) + " corpus graphs; n=30 mean max degree BAG " + fmt(bag, 2) + " ERP " +
                fmt(erp, 2));
}

// --- 7 ---------------------------------------------------------------------------

Outcome corpus_statistics() {
  Check c;
  std::string note;
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    gb::CorpusConfig cfg;
    cfg.tasks = {gb::kAllTasks.begin(), gb::kAllTasks.end()};
    cfg.splits = {gb::Difficulty::kEasy};
    cfg.seed = seed;
    const auto items = gb::build_corpus(cfg);
    double nodes = 0;
    for (const auto& q : items) nodes += static_cast<double>(q.graph.node_count());
    nodes /= static_cast<double>(items.size());
    c.expect(nodes >= 7.5 && nodes <= 8.5, "seed " + std::to_string(seed) + " mean n " + fmt(nodes, 3));
    for (const auto& cell : gb::corpus_stats(items)) {
      if (cell.family != gb::GraphFamily::kBAF) continue;
      c.expect(cell.avg_edges < cell.avg_nodes, std::string(gb::task_name(cell.task)) + " BAF edges >= nodes");
    }
    note += fmt(nodes, 3) + " ";
  }
  return c.done("Easy mean node count per seed: " + note);
}

// --- 8 ---------------------------------------------------------------------------

Outcome mock_pipeline() {
  Check c;
  gb::CorpusConfig cfg;
  cfg.tasks = {gb::kAllTasks.begin(), gb::kAllTasks.end()};
  cfg.splits = {gb::Difficulty::kEasy};
  cfg.count = 10;
  cfg.count_is_total = true;
  cfg.seed = 8;
  const auto queries = gb::build_corpus(cfg);
  const auto jobs = gb::cross_jobs(queries, {gb::kAllSchemes.begin(), gb::kAllSchemes.end()},
                                   {gb::kAllFormats.begin(), gb::kAllFormats.end()});
  const auto bank = gb::ExemplarBank::build(99, 5);
  auto registry = std::make_shared<gb::QueryRegistry>();
  gb::EvalOptions opts;
  opts.registry = registry.get();
  gb::GatewayConfig gw_cfg;
  gw_cfg.sleeper = [](std::chrono::milliseconds) {};

  gb::Gateway oracle_gw(std::make_shared<gb::OracleBackend>(registry), gw_cfg);
  const auto perfect = gb::evaluate(jobs, oracle_gw, bank, opts);
  std::size_t pivots = 0;
  for (gb::Dimension d : gb::kAllDimensions) {
    for (const auto& row : gb::aggregate(perfect, {d})) {
      ++pivots;
      c.expect(row.mean == 1.0, std::string(gb::dimension_name(d)) + "=" + row.key[0] + " scored " + fmt(row.mean));
    }
  }

  const double eps = 0.2;
  gb::Gateway coin_gw(std::make_shared<gb::BernoulliBackend>(registry, eps, 8), gw_cfg);
  const auto noisy = gb::evaluate(jobs, coin_gw, bank, opts);
  double acc = 0;
  for (const auto& r : noisy) acc += r.score;
  const double n = static_cast<double>(noisy.size());
  acc /= n;
  const double sigma = std::sqrt(eps * (1 - eps) / n);
  c.expect(noisy.size() >= 5000, "only " + std::to_string(noisy.size()) + " records");
  c.expect(std::abs(acc - (1 - eps)) <= 3 * sigma, "accuracy " + fmt(acc) + " outside 3 sigma");
  std::set<std::string> tasks, schemes, formats;
  for (const auto& r : noisy) {
    tasks.insert(r.task);
    schemes.insert(r.scheme);
    formats.insert(r.format);
  }
  c.expect(tasks.size() == gb::kAllTasks.size() && schemes.size() == gb::kAllSchemes.size() &&
               formats.size() == gb::kAllFormats.size(),
           "grid coverage incomplete");
  return c.done(std::to_string(noisy.size()) + " records, Bernoulli accuracy " + fmt(acc) + " (sigma " +
                fmt(sigma) + "), oracle 1.000 on " + std::to_string(pivots) + " pivot rows");
}

// --- 9 ---------------------------------------------------------------------------

// Additive per-factor effects scaled into [0, 0.5], best cell lifted to 1.0.
std::vector<double> planted_landscape(const gb::FactorSpace& space, std::uint64_t seed) {
  gb::Rng rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> effect;
  for (const auto& d : space.dims()) {
    effect.emplace_back();
    for (std::size_t i = 0; i < d.actions.size(); ++i) effect.back().push_back(u(rng));
  }
  std::vector<double> table(space.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto combo = space.at(i);
    for (std::size_t d = 0; d < combo.size(); ++d) table[i] += effect[d][combo[d]];
  }
  const double top = *std::max_element(table.begin(), table.end());
  for (double& v : table) v = 0.5 * v / top;
  table[std::max_element(table.begin(), table.end()) - table.begin()] = 1.0;
  return table;
}

Outcome rl_search() {
  const auto t0 = std::chrono::steady_clock::now();
  Check c;
  const auto space = gb::FactorSpace::standard({"m0", "m1", "m2", "m3", "m4"});
  c.expect(space.size() == 315, "K=" + std::to_string(space.size()));
  const int landscapes = 20;
  double cost = 0;
  int full_rate = 0, greedy_ok = 0;
  for (int s = 0; s < landscapes; ++s) {
    const auto table = planted_landscape(space, 1000 + s);
    auto sorted = table;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double median = sorted[sorted.size() / 2];
    const auto argmax = static_cast<std::size_t>(std::max_element(table.begin(), table.end()) - table.begin());
    c.expect(table[argmax] - median >= 0.2, "landscape " + std::to_string(s) + " gap too small");
    const gb::RewardFn reward = [&](const gb::Combination& x) { return table[space.index_of(x)]; };

    gb::DqnConfig cfg;
    cfg.episodes = 80;
    cfg.seed = static_cast<std::uint64_t>(s);
    const auto r = gb::run_dqn({}, space, reward, cfg);
    const auto cr = gb::cost_rate(r, table[argmax]);
    cost += cr.cost;
    full_rate += cr.rate == 1.0;

    gb::DqnConfig greedy;
    greedy.episodes = 5;
    greedy.epsilon_start = 0.0;
    greedy.epsilon_min = 0.0;
    greedy.seed = static_cast<std::uint64_t>(s);
    greedy.initial_values = reward;
    greedy_ok += space.index_of(gb::run_dqn({}, space, reward, greedy).best) == argmax;
  }
  cost /= landscapes;
  const double secs = seconds_since(t0);
  c.expect(cost <= 0.30, "mean Cost " + fmt(cost));
  c.expect(full_rate >= 18, "Rate=1 in " + std::to_string(full_rate) + "/20 (need 18)");
  c.expect(greedy_ok == landscapes, "greedy consistency " + std::to_string(greedy_ok) + "/20");
  c.expect(secs < 300, "took " + fmt(secs, 1) + " s");
  return c.done("mean Cost " + fmt(cost) + ", Rate=1 in " + std::to_string(full_rate) + "/20, greedy " +
                std::to_string(greedy_ok) + "/20, " + fmt(secs, 1) + " s");
}

// --- 10 --------------------------------------------------------------------------

int run(const std::string& command) {
  const int status = std::system((command + " >/dev/null 2>&1").c_str());
  return status == -1 ? -1 : WEXITSTATUS(status);
}

std::string quote(const fs::path& p) { return "'" + p.string() + "'"; }

Outcome determinism(const std::string& cli, const fs::path& corpora) {
  Check c;
  const fs::path dir = fs::temp_directory_path() / ("graphbench-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string gen = quote(cli) + " generate --difficulty easy,medium --count 16 --seed 4242 --out ";
  c.expect(run(gen + quote(dir / "a.jsonl")) == 0, "generate failed");
  c.expect(run(gen + quote(dir / "b.jsonl")) == 0, "generate failed");
  const std::string a = oracle::read_file(dir / "a.jsonl");
  c.expect(!a.empty() && a == oracle::read_file(dir / "b.jsonl"), "repeated generate differs");

  std::size_t shipped = 0;
  if (fs::is_directory(corpora)) {
    for (const auto& e : fs::directory_iterator(corpora)) {
      if (e.path().extension() != ".jsonl") continue;
      ++shipped;
      c.expect(run(quote(cli) + " selfcheck " + quote(e.path())) == 0, "selfcheck rejects " + e.path().filename().string());
    }
  }
  c.expect(shipped > 0, "no shipped corpora found");
  c.expect(run(quote(cli) + " selfcheck " + quote(dir / "a.jsonl")) == 0, "selfcheck rejects fresh corpus");

  std::vector<std::string> lines;
  {
    std::istringstream in(a);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
  }
  // One edit per field, each applied to the first record it makes sense on.
  using Edit = std::function<bool(json&)>;
  const std::vector<std::pair<std::string, Edit>> edits = {
      {"id", [](json& j) { j["id"] = j["id"].get<std::string>().substr(0, j["id"].get<std::string>().size() - 3) + "777"; return true; }},
      {"task", [](json& j) { j["task"] = j["task"] == "cycle" ? "triangle" : "cycle"; return true; }},
      {"difficulty", [](json& j) { j["difficulty"] = j["difficulty"] == "easy" ? "medium" : "easy"; return true; }},
      {"graph_type", [](json& j) { j["graph_type"] = j["graph_type"] == "ERM" ? "ERP" : "ERM"; return true; }},
      {"n", [](json& j) { j["n"] = j["n"].get<int>() + 1; return true; }},
      {"edges", [](json& j) {
         if (j["edges"].empty()) return false;
         j["edges"].erase(j["edges"].size() - 1);
         return true;
       }},
      {"params", [](json& j) {
         if (!j["params"].contains("start")) return false;
         j["params"]["start"] = (j["params"]["start"].get<int>() + 1) % j["n"].get<int>();
         return true;
       }},
      {"ground_truth", [](json& j) {
         if (j["ground_truth"].is_boolean()) j["ground_truth"] = !j["ground_truth"].get<bool>();
         else if (j["ground_truth"].is_number()) j["ground_truth"] = j["ground_truth"].get<int>() + 1;
         else return false;
         return true;
       }},
      {"seed", [](json& j) { j["seed"] = j["seed"].get<std::uint64_t>() + 1; return true; }},
  };
  std::size_t caught = 0;
  for (const auto& [field, edit] : edits) {
    bool applied = false;
    for (std::size_t i = 0; i < lines.size() && !applied; ++i) {
      json j = json::parse(lines[i]);
      if (!edit(j)) continue;
      applied = true;
      auto copy = lines;
      copy[i] = j.dump();
      std::ofstream out(dir / "bad.jsonl");
      for (const auto& l : copy) out << l << '\n';
      out.close();
      const int code = run(quote(cli) + " selfcheck " + quote(dir / "bad.jsonl"));
      caught += code == 1;
      c.expect(code == 1, "corrupted " + field + " gave exit " + std::to_string(code));
    }
    c.expect(applied, "no record to corrupt for " + field);
  }
  fs::remove_all(dir);
  return c.done("byte-identical reruns, " + std::to_string(shipped) + " shipped corpora clean, " +
                std::to_string(caught) + "/" + std::to_string(edits.size()) + " single-field corruptions caught");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::string cli;
  std::string corpora;
  app.add_option("--cli", cli, "graphbench executable")->required();
  app.add_option("--corpora", corpora, "directory of shipped corpora")->required();
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"serializer goldens", serializer_goldens},
      {"oracle equivalence", oracle_equivalence},
      {"BFS verifier exactness", bfs_verifier},
      {"regression cases", regression_cases},
      {"random baselines", random_baselines},
      {"generator structure", generator_structure},
      {"corpus statistics", corpus_statistics},
      {"end-to-end mock pipeline", mock_pipeline},
      {"RL search", rl_search},
      {"determinism", [&] { return determinism(cli, corpora); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
