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


// graphbench command-line driver.
//
// Exit codes: 0 success, 1 validation or runtime failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphbench/answers.hpp"
#include "graphbench/baselines.hpp"
#include "graphbench/corpus.hpp"
#include "graphbench/error.hpp"
#include "graphbench/gateway.hpp"
#include "graphbench/generators.hpp"
#include "graphbench/pipeline.hpp"
#include "graphbench/prompts.hpp"
#include "graphbench/reporting.hpp"
#include "graphbench/rl_opt.hpp"
#include "graphbench/serializers.hpp"

namespace gb = graphbench;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

// --- shared option handling ---------------------------------------------------

std::vector<std::string> split_list(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

template <typename T, typename Parse, typename All>
std::vector<T> parse_list(const std::vector<std::string>& raw, Parse parse, const All& all) {
  std::vector<T> out;
  for (const auto& name : split_list(raw)) out.push_back(parse(name));
  if (out.empty()) out.assign(all.begin(), all.end());
  return out;
}

// Flag, then environment, then config file.
struct Settings {
  nlohmann::json config = nlohmann::json::object();

  std::optional<std::string> get(const std::string& flag, const char* env, const char* key) const {
    if (!flag.empty()) return flag;
    if (const char* v = std::getenv(env); v != nullptr && *v != '\0') return std::string(v);
    if (config.contains(key) && config[key].is_string()) return config[key].get<std::string>();
    return std::nullopt;
  }

  template <typename T>
  T number(const std::string& key, T fallback) const {
    if (config.contains(key) && config[key].is_number()) return config[key].get<T>();
    return fallback;
  }
};

void load_config(Settings& settings, const std::string& path) {
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw gb::Error(gb::ErrorCode::kIoError, "cannot open config " + path);
  try {
    settings.config = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw gb::Error(gb::ErrorCode::kMalformedInput, "bad config " + path + ": " + e.what());
  }
  if (!settings.config.is_object()) throw gb::Error(gb::ErrorCode::kMalformedInput, "config must be a JSON object");
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw gb::Error(gb::ErrorCode::kIoError, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void write_file(const std::string& path, const std::string& text) {
  Output out(path);
  out.stream() << text;
}

// --- backend selection ----------------------------------------------------------

struct BackendOptions {
  std::string backend = "http";
  std::string endpoint;
  std::string api_key;
  std::string cache_dir;
  std::string model;
  double error_rate = 0.2;
  std::uint64_t mock_seed = 0;
  std::size_t max_in_flight = 0;  // 0: config or 4
  double temperature = 0.7;
  double top_p = 0.9;
  int max_tokens = 1024;
  std::size_t retries = 5;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--backend", backend, "http | oracle | bernoulli")
        ->check(CLI::IsMember({"http", "oracle", "bernoulli"}));
    cmd.add_option("--endpoint", endpoint, "chat-completions URL (GRAPHBENCH_ENDPOINT)");
    cmd.add_option("--api-key", api_key, "bearer token (GRAPHBENCH_API_KEY)");
    cmd.add_option("--cache-dir", cache_dir, "response cache (GRAPHBENCH_CACHE_DIR)");
    cmd.add_option("--model", model, "model name sent to the endpoint");
    cmd.add_option("--error-rate", error_rate, "bernoulli mock: fraction answered wrongly")
        ->check(CLI::Range(0.0, 1.0));
    cmd.add_option("--mock-seed", mock_seed, "bernoulli mock seed");
    cmd.add_option("--max-in-flight", max_in_flight, "concurrent requests");
    cmd.add_option("--temperature", temperature)->check(CLI::NonNegativeNumber);
    cmd.add_option("--top-p", top_p);
    cmd.add_option("--max-tokens", max_tokens);
    cmd.add_option("--retries", retries, "retry budget for rate limits and transport errors");
  }
};

struct Runtime {
  std::shared_ptr<gb::QueryRegistry> registry;
  std::unique_ptr<gb::Gateway> gateway;
  gb::EvalOptions eval;
};

Runtime make_runtime(const BackendOptions& o, const Settings& settings) {
  Runtime rt;
  std::shared_ptr<gb::Backend> backend;
  if (o.backend == "http") {
    auto endpoint = settings.get(o.endpoint, "GRAPHBENCH_ENDPOINT", "endpoint");
    if (!endpoint) throw gb::Error(gb::ErrorCode::kInvalidArgument, "no endpoint: pass --endpoint or set GRAPHBENCH_ENDPOINT");
    gb::HttpConfig http{*endpoint, settings.get(o.api_key, "GRAPHBENCH_API_KEY", "api_key").value_or(""),
                        settings.number<int>("timeout_seconds", 120)};
    backend = std::make_shared<gb::HttpBackend>(http);
  } else {
    rt.registry = std::make_shared<gb::QueryRegistry>();
    if (o.backend == "oracle") {
      backend = std::make_shared<gb::OracleBackend>(rt.registry);
    } else {
      backend = std::make_shared<gb::BernoulliBackend>(rt.registry, o.error_rate, o.mock_seed);
    }
  }
  gb::GatewayConfig gc;
  if (auto dir = settings.get(o.cache_dir, "GRAPHBENCH_CACHE_DIR", "cache_dir")) gc.cache_dir = *dir;
  gc.retry.max_retries = o.retries;
  rt.gateway = std::make_unique<gb::Gateway>(backend, gc);

  rt.eval.model = !o.model.empty() ? o.model
                  : settings.config.contains("model") ? settings.config["model"].get<std::string>()
                  : o.backend == "http"               ? std::string("default")
                                                      : "mock-" + o.backend;
  rt.eval.temperature = o.temperature;
  rt.eval.top_p = o.top_p;
  rt.eval.max_tokens = o.max_tokens;
  rt.eval.max_in_flight = o.max_in_flight ? o.max_in_flight : settings.number<std::size_t>("max_in_flight", 4);
  rt.eval.registry = rt.registry.get();
  return rt;
}

std::map<std::string, gb::QuerySpec> index_queries(const std::vector<gb::QuerySpec>& queries) {
  std::map<std::string, gb::QuerySpec> by_id;
  for (const auto& q : queries) by_id.emplace(q.id, q);
  return by_id;
}

// --- subcommands ------------------------------------------------------------------

struct GenerateCmd {
  std::vector<std::string> tasks, splits, families;
  std::size_t count = 10;
  bool per_cell = false;
  std::uint64_t seed = 0;
  std::string out;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("generate", "build a query corpus as JSONL");
    cmd->add_option("--task", tasks, "tasks (comma-separated; default all)");
    cmd->add_option("--difficulty", splits, "easy, medium, hard (default all)");
    cmd->add_option("--graph-types", families, "families (default every admissible one)");
    cmd->add_option("--count", count, "items per (task, difficulty), spread over families")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--per-cell", per_cell, "--count applies to each (task, difficulty, family) cell");
    cmd->add_option("--seed", seed, "master seed");
    cmd->add_option("--out", out, "output path (default stdout)");
    cmd->callback([this] { run(); });
  }

  void run() {
    gb::CorpusConfig config;
    config.tasks = parse_list<gb::TaskKind>(tasks, gb::parse_task, gb::kAllTasks);
    config.splits = parse_list<gb::Difficulty>(splits, gb::parse_difficulty, gb::kAllDifficulties);
    if (!families.empty()) {
      config.families = parse_list<gb::GraphFamily>(families, gb::parse_family, gb::kAllFamilies);
    }
    config.count = count;
    config.count_is_total = !per_cell;
    config.seed = seed;
    Output output(out);
    gb::write_corpus(output.stream(), gb::build_corpus(config));
  }
};

struct RenderCmd {
  std::string queries, out;
  std::vector<std::string> schemes, formats;
  std::uint64_t exemplar_seed = 0;
  std::size_t k = 5;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("render", "render prompts for a corpus");
    cmd->add_option("--queries", queries, "query JSONL")->required();
    cmd->add_option("--scheme", schemes, "prompt schemes (default all)");
    cmd->add_option("--format", formats, "serialization formats (default all)");
    cmd->add_option("--exemplar-seed", exemplar_seed);
    cmd->add_option("-k,--shots", k, "exemplars per shot-bearing prompt")->check(CLI::PositiveNumber);
    cmd->add_option("--out", out);
    cmd->callback([this] { run(); });
  }

  void run() {
    auto corpus = gb::read_corpus(std::filesystem::path(queries));
    auto s = parse_list<gb::PromptScheme>(schemes, gb::parse_scheme, gb::kAllSchemes);
    auto f = parse_list<gb::SerializationFormat>(formats, gb::parse_format, gb::kAllFormats);
    const auto bank = gb::ExemplarBank::build(exemplar_seed, k);
    Output output(out);
    for (const auto& job : gb::cross_jobs(corpus, s, f)) {
      const auto prompt = gb::compose_prompt(job.query, job.scheme, job.format, bank);
      nlohmann::ordered_json j;
      j["query_id"] = job.query.id;
      j["prompt_scheme"] = gb::scheme_name(job.scheme);
      j["serialization"] = gb::format_id(job.format);
      j["prompt"] = prompt.text;
      output.stream() << j.dump() << '\n';
    }
  }
};

struct EvaluateCmd {
  const Settings* settings = nullptr;
  std::string queries, out;
  std::vector<std::string> schemes, formats;
  std::uint64_t exemplar_seed = 0;
  BackendOptions backend;

  void add_to(CLI::App& app, const Settings& s) {
    settings = &s;
    auto* cmd = app.add_subcommand("evaluate", "send prompts to a model and score the answers");
    cmd->add_option("--queries", queries, "query JSONL")->required();
    cmd->add_option("--scheme", schemes, "prompt schemes (default all)");
    cmd->add_option("--format", formats, "serialization formats (default all)");
    cmd->add_option("--exemplar-seed", exemplar_seed);
    cmd->add_option("--out", out, "result JSONL");
    backend.add_to(*cmd);
    cmd->callback([this] { run(); });
  }

  void run() {
    auto corpus = gb::read_corpus(std::filesystem::path(queries));
    auto jobs = gb::cross_jobs(corpus, parse_list<gb::PromptScheme>(schemes, gb::parse_scheme, gb::kAllSchemes),
                               parse_list<gb::SerializationFormat>(formats, gb::parse_format, gb::kAllFormats));
    Runtime rt = make_runtime(backend, *settings);
    const auto records = gb::evaluate(jobs, *rt.gateway, gb::ExemplarBank::build(exemplar_seed), rt.eval);
    Output output(out);
    gb::write_records(output.stream(), records);
    std::size_t correct = 0, failed = 0;
    for (const auto& r : records) {
      correct += static_cast<std::size_t>(r.score);
      failed += r.error ? 1 : 0;
    }
    std::cerr << "evaluated " << records.size() << " prompts, accuracy "
              << (records.empty() ? 0.0 : static_cast<double>(correct) / static_cast<double>(records.size()))
              << ", " << failed << " failed, " << rt.gateway->backend_calls() << " backend calls\n";
  }
};

struct ScoreCmd {
  std::string queries, results, patterns, out;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("score", "re-extract and re-score stored responses");
    cmd->add_option("--queries", queries, "query JSONL")->required();
    cmd->add_option("--results", results, "result JSONL")->required();
    cmd->add_option("--patterns", patterns, "answer pattern file (default built in)");
    cmd->add_option("--out", out, "rescored result JSONL");
    cmd->callback([this] { run(); });
  }

  void run() {
    const auto by_id = index_queries(gb::read_corpus(std::filesystem::path(queries)));
    auto records = gb::read_records(std::filesystem::path(results));
    std::optional<gb::PatternSet> custom;
    if (!patterns.empty()) custom = gb::PatternSet::from_file(patterns);
    const gb::PatternSet& rules = custom ? *custom : gb::PatternSet::defaults();
    std::size_t correct = 0;
    for (auto& r : records) {
      auto it = by_id.find(r.query_id);
      if (it == by_id.end()) throw gb::Error(gb::ErrorCode::kMalformedInput, "unknown query id " + r.query_id);
      gb::rescore(r, it->second, rules);
      correct += static_cast<std::size_t>(r.score);
    }
    if (!out.empty()) {
      Output output(out);
      gb::write_records(output.stream(), records);
    }
    std::cout << "accuracy " << (records.empty() ? 0.0 : static_cast<double>(correct) / records.size()) << " ("
              << correct << "/" << records.size() << ")\n";
  }
};

struct BaselineCmd {
  std::string queries, mode = "analytic";
  std::size_t trials = 10000;
  std::uint64_t seed = 0;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("baseline", "random-guess accuracy per task and difficulty");
    cmd->add_option("--queries", queries, "query JSONL")->required();
    cmd->add_option("--mode", mode)->check(CLI::IsMember({"analytic", "monte-carlo"}));
    cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed);
    cmd->callback([this] { run(); });
  }

  void run() {
    std::map<std::pair<gb::TaskKind, gb::Difficulty>, std::vector<gb::QuerySpec>> groups;
    for (auto& q : gb::read_corpus(std::filesystem::path(queries))) groups[{q.task, q.difficulty}].push_back(q);
    gb::BaselineConfig config;
    config.trials = trials;
    config.seed = seed;
    const auto m = mode == "analytic" ? gb::BaselineMode::kAnalytic : gb::BaselineMode::kMonteCarlo;
    std::cout << "task,difficulty,queries,baseline\n";
    for (const auto& [key, items] : groups) {
      std::cout << gb::task_name(key.first) << ',' << gb::difficulty_name(key.second) << ',' << items.size()
                << ',' << gb::random_baseline(items, m, config) << '\n';
    }
  }
};

struct RlOptCmd {
  const Settings* settings = nullptr;
  std::size_t episodes = 80;
  std::vector<std::string> order;
  std::vector<std::string> models;
  std::string factors_file, reward = "live", out, episodes_csv;
  std::uint64_t seed = 0;
  std::string task = "bfs-order", split = "easy", schedule = "multiplicative";
  double decay = 0.95, learning_rate = 1e-3;
  std::size_t samples = 30, decoration = 0;
  bool grid = false;
  BackendOptions backend;

  void add_to(CLI::App& app, const Settings& s) {
    settings = &s;
    auto* cmd = app.add_subcommand("rlopt", "DQN search over prompt/format/model choices");
    cmd->add_option("--episodes", episodes)->check(CLI::NonNegativeNumber);
    cmd->add_option("--order", order, "dimension order, e.g. prompt,format,model");
    cmd->add_option("--models", models, "model pool for the model dimension");
    cmd->add_option("--factors-file", factors_file, "JSON factor space");
    cmd->add_option("--decoration-factors", decoration, "use the first N (1..6) decoration factors");
    cmd->add_option("--reward", reward, "table:<csv> or live");
    cmd->add_option("--seed", seed);
    cmd->add_option("--task", task);
    cmd->add_option("--difficulty", split);
    cmd->add_option("--epsilon-schedule", schedule)->check(CLI::IsMember({"multiplicative", "linear"}));
    cmd->add_option("--decay-rate", decay);
    cmd->add_option("--learning-rate", learning_rate);
    cmd->add_option("--samples", samples, "graphs per live reward evaluation")->check(CLI::PositiveNumber);
    cmd->add_flag("--grid", grid, "exhaustive search instead of DQN");
    cmd->add_option("--out", out, "SearchResult JSON (default stdout)");
    cmd->add_option("--episodes-csv", episodes_csv, "per-episode log");
    backend.add_to(*cmd);
    cmd->callback([this] { run(); });
  }

  gb::FactorSpace space() const {
    gb::FactorSpace base;
    if (!factors_file.empty()) {
      base = gb::FactorSpace::from_json_file(factors_file);
    } else if (decoration) {
      base = gb::FactorSpace::decoration_scale(decoration);
    } else {
      auto pool = split_list(models);
      if (pool.empty()) pool.push_back(backend.model.empty() ? "mock-" + backend.backend : backend.model);
      base = gb::FactorSpace::standard(pool);
    }
    const auto names = split_list(order);
    if (names.empty()) return base;
    std::vector<gb::FactorDimension> dims;
    for (const auto& n : names) {
      auto it = std::find_if(base.dims().begin(), base.dims().end(), [&](const auto& d) { return d.name == n; });
      if (it == base.dims().end()) throw gb::Error(gb::ErrorCode::kInvalidArgument, "unknown dimension '" + n + "'");
      dims.push_back(*it);
    }
    return gb::FactorSpace(std::move(dims));
  }

  void run() {
    const gb::FactorSpace fs = space();
    const gb::SearchState s0{gb::parse_task(task), gb::parse_difficulty(split)};
    gb::RewardFn reward_fn;
    std::optional<Runtime> rt;
    std::vector<gb::QuerySpec> sample;
    std::optional<gb::ExemplarBank> bank;

    if (reward.rfind("table:", 0) == 0) {
      auto table = std::make_shared<std::vector<double>>(gb::load_reward_table(reward.substr(6), fs));
      reward_fn = [table, &fs](const gb::Combination& c) { return (*table)[fs.index_of(c)]; };
    } else if (reward == "live") {
      rt.emplace(make_runtime(backend, *settings));
      gb::CorpusConfig cc;
      cc.tasks = {s0.task};
      cc.splits = {s0.split};
      cc.count = samples;
      cc.count_is_total = true;
      cc.seed = seed;
      sample = gb::build_corpus(cc);
      bank = gb::ExemplarBank::build(seed);
      reward_fn = [&](const gb::Combination& c) { return live_reward(fs, c, sample, *bank, *rt); };
    } else {
      throw gb::Error(gb::ErrorCode::kInvalidArgument, "--reward must be table:<path> or live");
    }

    gb::SearchResult result;
    if (grid) {
      result = gb::grid_search(fs, reward_fn);
    } else {
      gb::DqnConfig config;
      config.episodes = episodes;
      config.seed = seed;
      config.decay_rate = decay;
      config.learning_rate = learning_rate;
      config.schedule = schedule == "linear" ? gb::EpsilonSchedule::kLinear : gb::EpsilonSchedule::kMultiplicative;
      result = gb::run_dqn(s0, fs, reward_fn, config);
    }

    nlohmann::ordered_json j;
    j["task"] = task;
    j["difficulty"] = split;
    j["method"] = grid ? "grid" : "dqn";
    j["epsilon_schedule"] = schedule;
    j["best"] = fs.describe(result.best);
    j["best_reward"] = result.best_reward;
    j["episodes"] = result.episodes;
    j["explored"] = result.explored;
    j["space_size"] = result.space_size;
    j["cost"] = static_cast<double>(result.explored) / static_cast<double>(result.space_size);
    Output output(out);
    output.stream() << j.dump(2) << '\n';

    if (!episodes_csv.empty()) {
      std::ostringstream csv;
      csv << "episode,combination,reward,epsilon,fresh,explored,best_reward\n";
      for (const auto& e : result.log) {
        csv << e.episode << ",\"" << fs.describe(e.combination) << "\"," << e.reward << ',' << e.epsilon << ','
            << (e.fresh ? 1 : 0) << ',' << e.explored << ',' << e.best_reward << '\n';
      }
      write_file(episodes_csv, csv.str());
    }
  }

  static double live_reward(const gb::FactorSpace& fs, const gb::Combination& c,
                            const std::vector<gb::QuerySpec>& sample, const gb::ExemplarBank& bank, Runtime& rt) {
    gb::PromptScheme scheme = gb::PromptScheme::kZeroShot;
    gb::SerializationFormat format = gb::SerializationFormat::kAdjacencyList;
    gb::DecorationFactors deco;
    gb::EvalOptions eval = rt.eval;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto& dim = fs.dims()[i];
      const std::string& action = dim.actions[c[i]];
      const std::size_t pick = c[i];
      if (dim.name == "prompt") scheme = gb::parse_scheme(action);
      else if (dim.name == "format") format = gb::parse_format(action);
      else if (dim.name == "model") eval.model = action;
      else if (dim.name == "sentence-separator") deco.sentence_separator = std::string(gb::kSentenceSeparators.at(pick));
      else if (dim.name == "qa-separator") deco.qa_separator = std::string(gb::kQaSeparators.at(pick));
      else if (dim.name == "word-separator") deco.word_separator = std::string(gb::kWordSeparators.at(pick));
      else if (dim.name == "case") deco.case_style = gb::kCaseStyles.at(pick);
      else throw gb::Error(gb::ErrorCode::kInvalidArgument, "no live mapping for dimension '" + dim.name + "'");
    }
    std::vector<gb::EvalJob> jobs;
    for (const auto& q : sample) jobs.push_back(gb::EvalJob{q, scheme, format, deco});
    const auto records = gb::evaluate(jobs, *rt.gateway, bank, eval);
    double total = 0.0;
    for (const auto& r : records) total += r.score;
    return records.empty() ? 0.0 : total / static_cast<double>(records.size());
  }
};

struct ReportCmd {
  std::string results, task, split, csv_out, kind = "accuracy";
  std::vector<std::string> pivots;
  bool per_query = false;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("report", "pivot tables over result records");
    cmd->add_option("--results", results, "result JSONL")->required();
    cmd->add_option("--pivot", pivots, "model | scheme | format | graph-type | task | difficulty");
    cmd->add_option("--task", task, "restrict to one task");
    cmd->add_option("--split", split, "restrict to one difficulty");
    cmd->add_option("--kind", kind, "accuracy | sensitivity | tokens | heatmap")
        ->check(CLI::IsMember({"accuracy", "sensitivity", "tokens", "heatmap"}));
    cmd->add_flag("--per-query", per_query, "confidence interval over raw records");
    cmd->add_option("--csv-out", csv_out, "CSV path (default stdout)");
    cmd->callback([this] { run(); });
  }

  void run() {
    std::vector<gb::EvalRecord> records;
    for (auto& r : gb::read_records(std::filesystem::path(results))) {
      if (!task.empty() && r.task != std::string(gb::task_name(gb::parse_task(task)))) continue;
      if (!split.empty() && r.difficulty != std::string(gb::difficulty_name(gb::parse_difficulty(split)))) continue;
      records.push_back(std::move(r));
    }
    std::vector<gb::Dimension> dims;
    for (const auto& p : split_list(pivots)) dims.push_back(gb::parse_dimension(p));

    std::string csv;
    if (kind == "accuracy") {
      csv = gb::to_csv(gb::aggregate(records, dims, gb::AggregateOptions{per_query}), dims);
    } else if (kind == "sensitivity") {
      if (task.empty() || split.empty()) {
        throw gb::Error(gb::ErrorCode::kInvalidArgument, "sensitivity needs --task and --split");
      }
      csv = gb::to_csv(gb::sensitivity(records, gb::task_name(gb::parse_task(task)),
                                       gb::difficulty_name(gb::parse_difficulty(split))));
    } else if (kind == "tokens") {
      const auto report = gb::token_report(records, dims);
      csv = gb::to_csv(report, dims);
      std::cerr << report.excluded << " records without usage excluded\n";
    } else {
      csv = gb::heatmap_csv(records);
    }
    write_file(csv_out, csv);
  }
};

struct SelfCheckCmd {
  std::vector<std::string> files;
  int status = 0;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("selfcheck", "revalidate corpora: ground truths, regeneration, serializers");
    cmd->add_option("files", files, "query JSONL files")->required();
    cmd->callback([this] { run(); });
  }

  void run() {
    std::size_t issues = 0;
    for (const auto& path : files) {
      std::ifstream in(path);
      if (!in) throw gb::Error(gb::ErrorCode::kIoError, "cannot open " + path);
      for (const auto& issue : gb::selfcheck(in)) {
        std::cout << path << ":" << issue.line << ": " << (issue.id.empty() ? "-" : issue.id) << ": "
                  << issue.message << '\n';
        ++issues;
      }
      issues += check_serializers(path);
    }
    if (issues) {
      std::cout << issues << " issue(s)\n";
      status = kExitValidation;
    }
  }

  // Every stored graph must survive a round trip through every format.
  static std::size_t check_serializers(const std::string& path) {
    std::vector<gb::QuerySpec> corpus;
    try {
      corpus = gb::read_corpus(std::filesystem::path(path));
    } catch (const gb::Error&) {
      return 0;  // already reported line by line
    }
    std::size_t issues = 0;
    for (const auto& q : corpus) {
      for (auto fmt : gb::kAllFormats) {
        const auto back = gb::parse(gb::serialize(q.graph, fmt), fmt, q.graph.node_count());
        if (!(back == q.graph)) {
          std::cout << path << ": " << q.id << ": " << gb::format_id(fmt) << " round trip differs\n";
          ++issues;
        }
      }
    }
    return issues;
  }
};

struct StatsCmd {
  std::string queries, out;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("stats", "average nodes and edges per cell");
    cmd->add_option("--queries", queries, "query JSONL")->required();
    cmd->add_option("--out", out);
    cmd->callback([this] { run(); });
  }

  void run() {
    std::ostringstream csv;
    csv << "task,graph_type,difficulty,count,avg_nodes,avg_edges\n";
    for (const auto& c : gb::corpus_stats(gb::read_corpus(std::filesystem::path(queries)))) {
      csv << gb::task_name(c.task) << ',' << gb::family_name(c.family) << ',' << gb::difficulty_name(c.split) << ','
          << c.count << ',' << c.avg_nodes << ',' << c.avg_edges << '\n';
    }
    write_file(out, csv.str());
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphbench: graph reasoning benchmark toolkit"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config (flags and environment take precedence)");

  Settings settings;
  GenerateCmd generate;
  RenderCmd render;
  EvaluateCmd evaluate;
  ScoreCmd score;
  BaselineCmd baseline;
  RlOptCmd rlopt;
  ReportCmd report;
  SelfCheckCmd selfcheck;
  StatsCmd stats;
  generate.add_to(app);
  render.add_to(app);
  evaluate.add_to(app, settings);
  score.add_to(app);
  baseline.add_to(app);
  rlopt.add_to(app, settings);
  report.add_to(app);
  selfcheck.add_to(app);
  stats.add_to(app);
  app.parse_complete_callback([&] { load_config(settings, config_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const gb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == gb::ErrorCode::kInvalidArgument ? kExitUsage : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return selfcheck.status;
}
