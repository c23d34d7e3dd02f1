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


#include "graphbench/gateway.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include <openssl/evp.h>

#include "graphbench/generators.hpp"
#include "httplib.h"
#include "json.hpp"

namespace graphbench {
namespace {

using json = nlohmann::json;

std::uint64_t fnv1a(std::string_view text, std::uint64_t seed) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ seed;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

double unit_draw(std::uint64_t key) {
  Rng rng(key);
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

json response_to_json(const CompletionResponse& r) {
  json j;
  j["text"] = r.text;
  j["tokens_in"] = r.tokens_in ? json(*r.tokens_in) : json(nullptr);
  j["tokens_out"] = r.tokens_out ? json(*r.tokens_out) : json(nullptr);
  j["latency_ms"] = r.latency_ms;
  j["backend_id"] = r.backend_id;
  return j;
}

CompletionResponse response_from_json(const json& j) {
  CompletionResponse r;
  r.text = j.at("text").get<std::string>();
  if (!j.at("tokens_in").is_null()) r.tokens_in = j.at("tokens_in").get<std::int64_t>();
  if (!j.at("tokens_out").is_null()) r.tokens_out = j.at("tokens_out").get<std::int64_t>();
  r.latency_ms = j.at("latency_ms").get<double>();
  r.backend_id = j.at("backend_id").get<std::string>();
  return r;
}

}  // namespace

// --- HttpBackend ---------------------------------------------------------------

HttpBackend::HttpBackend(HttpConfig config) : config_(std::move(config)) {
  const std::string& url = config_.endpoint;
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument, "endpoint must be an http(s) URL: '" + url + "'");
  }
  const auto path_start = url.find('/', scheme_end + 3);
  host_ = url.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/" : url.substr(path_start);
}

CompletionResponse HttpBackend::complete(const CompletionRequest& request) {
  json body;
  body["model"] = request.model;
  body["messages"] = json::array({json{{"role", "user"}, {"content", request.prompt}}});
  body["temperature"] = request.temperature;
  body["top_p"] = request.top_p;
  body["max_tokens"] = request.max_tokens;

  httplib::Client client(host_);
  client.set_connection_timeout(config_.timeout_seconds, 0);
  client.set_read_timeout(config_.timeout_seconds, 0);
  httplib::Headers headers;
  if (!config_.api_key.empty()) headers.emplace("Authorization", "Bearer " + config_.api_key);

  const auto start = std::chrono::steady_clock::now();
  auto result = client.Post(path_, headers, body.dump(), "application/json");
  const double latency =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (!result) {
    throw Error(ErrorCode::kTransportError, "request to " + host_ + " failed: " + httplib::to_string(result.error()));
  }
  if (result->status == 429) throw Error(ErrorCode::kRateLimited, "endpoint returned 429");
  if (result->status < 200 || result->status >= 300) {
    throw Error(ErrorCode::kTransportError, "endpoint returned HTTP " + std::to_string(result->status));
  }
  try {
    const json reply = json::parse(result->body);
    CompletionResponse r;
    r.text = reply.at("choices").at(0).at("message").at("content").get<std::string>();
    if (auto usage = reply.find("usage"); usage != reply.end() && usage->is_object()) {
      if (usage->contains("prompt_tokens")) r.tokens_in = usage->at("prompt_tokens").get<std::int64_t>();
      if (usage->contains("completion_tokens")) {
        r.tokens_out = usage->at("completion_tokens").get<std::int64_t>();
      }
    }
    r.latency_ms = latency;
    r.backend_id = id();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedResponse, std::string("unexpected completion body: ") + e.what());
  }
}

// --- mocks ---------------------------------------------------------------------

void QueryRegistry::add(const std::string& prompt, const QuerySpec& query) {
  std::unique_lock lock(mutex_);
  queries_.insert_or_assign(prompt, query);
}

std::optional<QuerySpec> QueryRegistry::find(const std::string& prompt) const {
  std::shared_lock lock(mutex_);
  auto it = queries_.find(prompt);
  if (it == queries_.end()) return std::nullopt;
  return it->second;
}

std::size_t QueryRegistry::size() const {
  std::shared_lock lock(mutex_);
  return queries_.size();
}

OracleBackend::OracleBackend(std::shared_ptr<const QueryRegistry> registry,
                             std::optional<std::int64_t> tokens_out)
    : registry_(std::move(registry)), tokens_out_(tokens_out) {}

CompletionResponse OracleBackend::complete(const CompletionRequest& request) {
  CompletionResponse r;
  r.backend_id = id();
  r.tokens_out = tokens_out_;
  if (tokens_out_) r.tokens_in = static_cast<std::int64_t>(request.prompt.size() / 4);
  auto query = registry_->find(request.prompt);
  r.text = query ? answer_text(*query, AnswerStyle::kTerse) : BernoulliBackend::kWrongAnswer;
  return r;
}

BernoulliBackend::BernoulliBackend(std::shared_ptr<const QueryRegistry> registry, double error_rate,
                                   std::uint64_t seed, std::optional<std::int64_t> tokens_out)
    : oracle_(std::move(registry), tokens_out), error_rate_(error_rate), seed_(seed) {
  if (error_rate < 0.0 || error_rate > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "error rate must lie in [0, 1]");
  }
}

CompletionResponse BernoulliBackend::complete(const CompletionRequest& request) {
  CompletionResponse r = oracle_.complete(request);
  r.backend_id = id();
  if (unit_draw(fnv1a(request.prompt, seed_)) < error_rate_) r.text = kWrongAnswer;
  return r;
}

CannedBackend::CannedBackend(std::map<std::string, std::string> responses, std::string fallback)
    : responses_(std::move(responses)), fallback_(std::move(fallback)) {}

CompletionResponse CannedBackend::complete(const CompletionRequest& request) {
  if (hook_) hook_(request);
  CompletionResponse r;
  auto it = responses_.find(request.prompt);
  r.text = it == responses_.end() ? fallback_ : it->second;
  r.backend_id = id();
  return r;
}

FaultInjectingBackend::FaultInjectingBackend(std::shared_ptr<Backend> inner, double failure_rate,
                                             std::uint64_t seed)
    : inner_(std::move(inner)), failure_rate_(failure_rate), seed_(seed) {}

CompletionResponse FaultInjectingBackend::complete(const CompletionRequest& request) {
  const std::uint64_t call = calls_.fetch_add(1);
  if (unit_draw(derive_seed(seed_, {call})) < failure_rate_) {
    injected_.fetch_add(1);
    throw Error(ErrorCode::kRateLimited, "injected rate limit");
  }
  return inner_->complete(request);
}

// --- Gateway ---------------------------------------------------------------------

Gateway::Gateway(std::shared_ptr<Backend> backend, GatewayConfig config)
    : backend_(std::move(backend)), config_(std::move(config)) {
  if (!config_.sleeper) {
    config_.sleeper = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
  }
  if (config_.cache_dir) std::filesystem::create_directories(*config_.cache_dir);
}

std::string Gateway::cache_key(const CompletionRequest& request) {
  std::ostringstream material;
  material << request.model << '\0' << request.prompt << '\0' << request.temperature << '\0'
           << request.top_p << '\0' << request.max_tokens;
  const std::string text = material.str();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kIoError, "SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 0xf];
  }
  return hex;
}

std::optional<CompletionResponse> Gateway::cache_lookup(const std::string& key) {
  std::lock_guard lock(cache_mutex_);
  if (auto it = memory_cache_.find(key); it != memory_cache_.end()) return it->second;
  if (!config_.cache_dir) return std::nullopt;
  std::ifstream in(*config_.cache_dir / key.substr(0, 2) / (key + ".json"));
  if (!in) return std::nullopt;
  try {
    CompletionResponse r = response_from_json(json::parse(in));
    memory_cache_.emplace(key, r);
    return r;
  } catch (const json::exception&) {
    return std::nullopt;  // torn or foreign file: treat as a miss and overwrite
  }
}

void Gateway::cache_store(const std::string& key, const CompletionResponse& response) {
  std::lock_guard lock(cache_mutex_);
  memory_cache_.insert_or_assign(key, response);
  if (!config_.cache_dir) return;
  const auto dir = *config_.cache_dir / key.substr(0, 2);
  std::filesystem::create_directories(dir);
  const auto tmp = dir / (key + ".tmp");
  {
    std::ofstream out(tmp);
    out << response_to_json(response).dump();
    if (!out) throw Error(ErrorCode::kIoError, "cannot write cache entry " + tmp.string());
  }
  std::filesystem::rename(tmp, dir / (key + ".json"));
}

CompletionResponse Gateway::complete(const CompletionRequest& request) {
  if (request.temperature < 0.0) throw Error(ErrorCode::kInvalidArgument, "temperature must be >= 0");
  const std::string key = cache_key(request);
  if (auto hit = cache_lookup(key)) {
    hit->cache_hit = true;
    return *hit;
  }
  std::chrono::milliseconds delay = config_.retry.base_delay;
  for (std::size_t attempt = 0;; ++attempt) {
    try {
      const std::size_t now = in_flight_.fetch_add(1) + 1;
      std::size_t peak = peak_in_flight_.load();
      while (now > peak && !peak_in_flight_.compare_exchange_weak(peak, now)) {
      }
      backend_calls_.fetch_add(1);
      CompletionResponse response;
      try {
        response = backend_->complete(request);
      } catch (...) {
        in_flight_.fetch_sub(1);
        throw;
      }
      in_flight_.fetch_sub(1);
      cache_store(key, response);
      return response;
    } catch (const Error& e) {
      const bool retryable = e.code() == ErrorCode::kRateLimited || e.code() == ErrorCode::kTransportError;
      if (!retryable || attempt >= config_.retry.max_retries) throw;
      config_.sleeper(delay);
      const auto next = std::chrono::milliseconds(
          static_cast<std::int64_t>(static_cast<double>(delay.count()) * config_.retry.multiplier));
      delay = std::min(next, config_.retry.max_delay);
    }
  }
}

std::vector<BatchResult> Gateway::run_batch(const std::vector<CompletionRequest>& requests,
                                            std::size_t max_in_flight) {
  if (max_in_flight == 0) throw Error(ErrorCode::kInvalidArgument, "max_in_flight must be >= 1");
  std::vector<BatchResult> results(requests.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < requests.size(); i = next.fetch_add(1)) {
      try {
        results[i].response = complete(requests[i]);
      } catch (const Error& e) {
        results[i].error = e.code();
        results[i].error_message = e.what();
      } catch (const std::exception& e) {
        results[i].error = ErrorCode::kTransportError;
        results[i].error_message = e.what();
      }
    }
  };
  const std::size_t workers = std::min(max_in_flight, requests.size());
  if (workers <= 1) {
    worker();
    return results;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  return results;
}

}  // namespace graphbench
