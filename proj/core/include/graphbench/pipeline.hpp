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


// Query -> prompt -> completion -> score, and the result-record JSONL.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphbench/answers.hpp"
#include "graphbench/gateway.hpp"
#include "graphbench/prompts.hpp"
#include "graphbench/query.hpp"
#include "graphbench/serializers.hpp"

namespace graphbench {

struct EvalRecord {
  std::string query_id;
  std::string model;
  std::string scheme;  // scheme_name()
  std::string format;  // format_id()
  std::string response;
  std::string extracted;  // describe() of the extracted answer
  int score = 0;
  std::optional<std::int64_t> tokens_in;
  std::optional<std::int64_t> tokens_out;
  double latency_ms = 0.0;
  // Pivot keys copied from the query.
  std::string task;
  std::string difficulty;
  std::string graph_type;
  // Set when the gateway gave up on the item; score is then 0.
  std::optional<std::string> error;
};

struct EvalJob {
  QuerySpec query;
  PromptScheme scheme = PromptScheme::kZeroShot;
  SerializationFormat format = SerializationFormat::kAdjacencyList;
  DecorationFactors decoration;
};

struct EvalOptions {
  std::string model = "mock";
  double temperature = 0.7;
  double top_p = 0.9;
  int max_tokens = 1024;
  std::size_t max_in_flight = 4;
  const PatternSet* patterns = nullptr;  // defaults() when null
  // When set, every rendered prompt is registered so the oracle-driven
  // mock backends can answer it.
  QueryRegistry* registry = nullptr;
};

// One record per job, in job order.
std::vector<EvalRecord> evaluate(const std::vector<EvalJob>& jobs, Gateway& gateway,
                                 const ExemplarBank& bank, const EvalOptions& options);

// Every (query, scheme, format) in the given order.
std::vector<EvalJob> cross_jobs(const std::vector<QuerySpec>& queries,
                                const std::vector<PromptScheme>& schemes,
                                const std::vector<SerializationFormat>& formats);

// Re-extracts and re-scores a stored response against its query.
void rescore(EvalRecord& record, const QuerySpec& query,
             const PatternSet& patterns = PatternSet::defaults());

std::string record_to_jsonl(const EvalRecord& record);
EvalRecord record_from_jsonl(std::string_view line);  // Error(kMalformedInput)

void write_records(std::ostream& out, const std::vector<EvalRecord>& records);
std::vector<EvalRecord> read_records(std::istream& in);
std::vector<EvalRecord> read_records(const std::filesystem::path& path);

}  // namespace graphbench
