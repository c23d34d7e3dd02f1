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


#include "graphbench/pipeline.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "graphbench/error.hpp"
#include "json.hpp"

namespace graphbench {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json optional_int(const std::optional<std::int64_t>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

std::vector<EvalJob> cross_jobs(const std::vector<QuerySpec>& queries,
                                const std::vector<PromptScheme>& schemes,
                                const std::vector<SerializationFormat>& formats) {
  std::vector<EvalJob> jobs;
  jobs.reserve(queries.size() * schemes.size() * formats.size());
  for (const auto& q : queries) {
    for (PromptScheme s : schemes) {
      for (SerializationFormat f : formats) jobs.push_back(EvalJob{q, s, f, {}});
    }
  }
  return jobs;
}

void rescore(EvalRecord& record, const QuerySpec& query, const PatternSet& patterns) {
  const ExtractedAnswer answer = extract(query.task, record.response, patterns);
  record.extracted = describe(answer);
  record.score = record.error ? 0 : score(query, answer);
}

std::vector<EvalRecord> evaluate(const std::vector<EvalJob>& jobs, Gateway& gateway,
                                 const ExemplarBank& bank, const EvalOptions& options) {
  const PatternSet& patterns = options.patterns ? *options.patterns : PatternSet::defaults();
  std::vector<CompletionRequest> requests;
  requests.reserve(jobs.size());
  for (const auto& job : jobs) {
    RenderedPrompt prompt = compose_prompt(job.query, job.scheme, job.format, bank, job.decoration);
    if (options.registry) options.registry->add(prompt.text, job.query);
    requests.push_back(CompletionRequest{options.model, std::move(prompt.text), options.temperature,
                                         options.top_p, options.max_tokens});
  }
  std::vector<BatchResult> results = gateway.run_batch(requests, options.max_in_flight);

  std::vector<EvalRecord> records(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const EvalJob& job = jobs[i];
    EvalRecord& r = records[i];
    r.query_id = job.query.id;
    r.model = options.model;
    r.scheme = std::string(scheme_name(job.scheme));
    r.format = std::string(format_id(job.format));
    r.task = std::string(task_name(job.query.task));
    r.difficulty = std::string(difficulty_name(job.query.difficulty));
    r.graph_type = std::string(family_name(job.query.family));
    if (results[i].response) {
      const CompletionResponse& resp = *results[i].response;
      r.response = resp.text;
      r.tokens_in = resp.tokens_in;
      r.tokens_out = resp.tokens_out;
      r.latency_ms = resp.latency_ms;
    } else {
      r.error = results[i].error_message;
    }
    rescore(r, job.query, patterns);
  }
  return records;
}

std::string record_to_jsonl(const EvalRecord& r) {
  ordered_json j;
  j["query_id"] = r.query_id;
  j["model"] = r.model;
  j["prompt_scheme"] = r.scheme;
  j["serialization"] = r.format;
  j["response"] = r.response;
  j["extracted"] = r.extracted;
  j["score"] = r.score;
  j["tokens_in"] = optional_int(r.tokens_in);
  j["tokens_out"] = optional_int(r.tokens_out);
  j["latency_ms"] = r.latency_ms;
  j["task"] = r.task;
  j["difficulty"] = r.difficulty;
  j["graph_type"] = r.graph_type;
  j["error"] = r.error ? ordered_json(*r.error) : ordered_json(nullptr);
  return j.dump();
}

EvalRecord record_from_jsonl(std::string_view line) {
  try {
    const auto j = ordered_json::parse(line);
    EvalRecord r;
    r.query_id = j.at("query_id").get<std::string>();
    r.model = j.at("model").get<std::string>();
    r.scheme = j.at("prompt_scheme").get<std::string>();
    r.format = j.at("serialization").get<std::string>();
    r.response = j.at("response").get<std::string>();
    r.extracted = j.value("extracted", std::string{});
    r.score = j.at("score").get<int>();
    if (j.contains("tokens_in") && !j["tokens_in"].is_null()) r.tokens_in = j["tokens_in"].get<std::int64_t>();
    if (j.contains("tokens_out") && !j["tokens_out"].is_null()) {
      r.tokens_out = j["tokens_out"].get<std::int64_t>();
    }
    r.latency_ms = j.value("latency_ms", 0.0);
    r.task = j.value("task", std::string{});
    r.difficulty = j.value("difficulty", std::string{});
    r.graph_type = j.value("graph_type", std::string{});
    if (j.contains("error") && !j["error"].is_null()) r.error = j["error"].get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, std::string("bad result record: ") + e.what());
  }
}

void write_records(std::ostream& out, const std::vector<EvalRecord>& records) {
  for (const auto& r : records) out << record_to_jsonl(r) << '\n';
}

std::vector<EvalRecord> read_records(std::istream& in) {
  std::vector<EvalRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    records.push_back(record_from_jsonl(line));
  }
  return records;
}

std::vector<EvalRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return read_records(in);
}

}  // namespace graphbench
