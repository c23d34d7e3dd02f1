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


// Chat-completion client with caching, retries and bounded concurrency,
// plus deterministic mock backends.

#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphbench/error.hpp"
#include "graphbench/prompts.hpp"
#include "graphbench/query.hpp"

namespace graphbench {

struct CompletionRequest {
  std::string model;
  std::string prompt;
  double temperature = 0.7;
  double top_p = 0.9;
  int max_tokens = 1024;
};

struct CompletionResponse {
  std::string text;
  std::optional<std::int64_t> tokens_in;   // only when the backend reports usage
  std::optional<std::int64_t> tokens_out;
  double latency_ms = 0.0;
  std::string backend_id;
  bool cache_hit = false;
};

class Backend {
 public:
  virtual ~Backend() = default;
  // Throws Error with kRateLimited, kTransportError or kMalformedResponse.
  virtual CompletionResponse complete(const CompletionRequest& request) = 0;
  virtual std::string id() const = 0;
};

struct HttpConfig {
  // Full URL of a chat-completions endpoint, e.g.
  // "https://api.example.com/v1/chat/completions".
  std::string endpoint;
  std::string api_key;
  int timeout_seconds = 120;
};

class HttpBackend : public Backend {
 public:
  explicit HttpBackend(HttpConfig config);
  CompletionResponse complete(const CompletionRequest& request) override;
  std::string id() const override { return "http"; }

 private:
  HttpConfig config_;
  std::string host_;  // scheme://host[:port]
  std::string path_;
};

// Prompt -> query lookup shared by the oracle-driven mocks.
class QueryRegistry {
 public:
  void add(const std::string& prompt, const QuerySpec& query);
  std::optional<QuerySpec> find(const std::string& prompt) const;
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, QuerySpec> queries_;
};

// Answers every registered prompt correctly with the oracle's terse answer
// and reports a fixed token usage.
class OracleBackend : public Backend {
 public:
  explicit OracleBackend(std::shared_ptr<const QueryRegistry> registry,
                         std::optional<std::int64_t> tokens_out = 100);
  CompletionResponse complete(const CompletionRequest& request) override;
  std::string id() const override { return "mock-oracle"; }

 private:
  std::shared_ptr<const QueryRegistry> registry_;
  std::optional<std::int64_t> tokens_out_;
};

// Oracle answers, except that each prompt is answered unusably with
// probability `error_rate`. The coin is a hash of (seed, prompt), so
// replays agree.
class BernoulliBackend : public Backend {
 public:
  BernoulliBackend(std::shared_ptr<const QueryRegistry> registry, double error_rate, std::uint64_t seed,
                   std::optional<std::int64_t> tokens_out = 100);
  CompletionResponse complete(const CompletionRequest& request) override;
  std::string id() const override { return "mock-bernoulli"; }

  static constexpr const char* kWrongAnswer = "I cannot determine this.";

 private:
  OracleBackend oracle_;
  double error_rate_;
  std::uint64_t seed_;
};

// Fixed transcripts keyed by prompt, with a fallback text. An optional
// hook runs inside every call (tests use it to observe concurrency).
class CannedBackend : public Backend {
 public:
  explicit CannedBackend(std::map<std::string, std::string> responses = {},
                         std::string fallback = BernoulliBackend::kWrongAnswer);
  CompletionResponse complete(const CompletionRequest& request) override;
  std::string id() const override { return "mock-canned"; }
  void set_hook(std::function<void(const CompletionRequest&)> hook) { hook_ = std::move(hook); }

 private:
  std::map<std::string, std::string> responses_;
  std::string fallback_;
  std::function<void(const CompletionRequest&)> hook_;
};

// Wraps a backend and fails a fraction of calls with kRateLimited.
class FaultInjectingBackend : public Backend {
 public:
  FaultInjectingBackend(std::shared_ptr<Backend> inner, double failure_rate, std::uint64_t seed);
  CompletionResponse complete(const CompletionRequest& request) override;
  std::string id() const override { return inner_->id(); }
  std::size_t injected() const { return injected_.load(); }

 private:
  std::shared_ptr<Backend> inner_;
  double failure_rate_;
  std::uint64_t seed_;
  std::atomic<std::uint64_t> calls_{0};
  std::atomic<std::size_t> injected_{0};
};

struct RetryPolicy {
  std::size_t max_retries = 5;
  std::chrono::milliseconds base_delay{500};
  double multiplier = 2.0;
  std::chrono::milliseconds max_delay{30000};
};

struct GatewayConfig {
  // Content-addressed response cache; disabled when unset.
  std::optional<std::filesystem::path> cache_dir;
  RetryPolicy retry;
  // Replaces std::this_thread::sleep_for during backoff (tests pass a no-op).
  std::function<void(std::chrono::milliseconds)> sleeper;
};

struct BatchResult {
  std::optional<CompletionResponse> response;
  std::optional<ErrorCode> error;
  std::string error_message;
};

class Gateway {
 public:
  Gateway(std::shared_ptr<Backend> backend, GatewayConfig config = {});

  // Cache, then backend with exponential backoff on kRateLimited and
  // kTransportError. Rethrows the last error once retries run out.
  CompletionResponse complete(const CompletionRequest& request);

  // Output order matches `requests`; at most `max_in_flight` backend calls
  // run at once. Failures are stored per item.
  std::vector<BatchResult> run_batch(const std::vector<CompletionRequest>& requests,
                                     std::size_t max_in_flight);

  // Hex SHA-256 over model, prompt and sampling parameters.
  static std::string cache_key(const CompletionRequest& request);

  Backend& backend() { return *backend_; }
  std::size_t backend_calls() const { return backend_calls_.load(); }
  std::size_t peak_in_flight() const { return peak_in_flight_.load(); }

 private:
  std::optional<CompletionResponse> cache_lookup(const std::string& key);
  void cache_store(const std::string& key, const CompletionResponse& response);

  std::shared_ptr<Backend> backend_;
  GatewayConfig config_;
  std::mutex cache_mutex_;
  std::unordered_map<std::string, CompletionResponse> memory_cache_;
  std::atomic<std::size_t> backend_calls_{0};
  std::atomic<std::size_t> in_flight_{0};
  std::atomic<std::size_t> peak_in_flight_{0};
};

}  // namespace graphbench
