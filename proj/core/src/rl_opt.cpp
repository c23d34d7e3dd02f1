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


#include "graphbench/rl_opt.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "graphbench/error.hpp"
#include "graphbench/prompts.hpp"
#include "graphbench/serializers.hpp"
#include "json.hpp"
#include "text_util.hpp"

namespace graphbench {

// --- FactorSpace -------------------------------------------------------------------

FactorSpace::FactorSpace(std::vector<FactorDimension> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw Error(ErrorCode::kEmptyFactor, "factor space has no dimensions");
  for (const auto& d : dims_) {
    if (d.actions.empty()) throw Error(ErrorCode::kEmptyFactor, "factor '" + d.name + "' has no actions");
  }
}

FactorSpace FactorSpace::standard(const std::vector<std::string>& models) {
  FactorDimension scheme{"prompt", {}};
  for (PromptScheme s : kAllSchemes) scheme.actions.emplace_back(scheme_name(s));
  FactorDimension format{"format", {}};
  for (SerializationFormat f : kAllFormats) format.actions.emplace_back(format_id(f));
  return FactorSpace({scheme, format, FactorDimension{"model", models}});
}

FactorSpace FactorSpace::decoration_scale(std::size_t factors) {
  if (factors < 1 || factors > 6) {
    throw Error(ErrorCode::kInvalidArgument, "decoration scale takes 1..6 factors");
  }
  auto labelled = [](std::string name, std::string prefix, std::size_t count) {
    FactorDimension d{std::move(name), {}};
    for (std::size_t i = 0; i < count; ++i) d.actions.push_back(prefix + std::to_string(i));
    return d;
  };
  std::vector<FactorDimension> all;
  all.push_back(labelled("sentence-separator", "s", kSentenceSeparators.size()));
  all.push_back(labelled("qa-separator", "q", kQaSeparators.size()));
  all.push_back(labelled("word-separator", "w", kWordSeparators.size()));
  FactorDimension cases{"case", {}};
  for (CaseStyle c : kCaseStyles) cases.actions.emplace_back(case_style_name(c));
  all.push_back(cases);
  all.push_back(standard({"-"}).dims()[1]);
  all.push_back(standard({"-"}).dims()[0]);
  all.resize(factors);
  return FactorSpace(std::move(all));
}

FactorSpace FactorSpace::from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  try {
    const auto j = nlohmann::json::parse(in);
    std::vector<FactorDimension> dims;
    for (const auto& d : j.at("dims")) {
      dims.push_back(FactorDimension{d.at("name").get<std::string>(),
                                     d.at("actions").get<std::vector<std::string>>()});
    }
    return FactorSpace(std::move(dims));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, "bad factors file: " + std::string(e.what()));
  }
}

std::size_t FactorSpace::size() const {
  std::size_t k = dims_.empty() ? 0 : 1;
  for (const auto& d : dims_) k *= d.actions.size();
  return k;
}

std::size_t FactorSpace::index_of(const Combination& c) const {
  if (c.size() != dims_.size()) throw Error(ErrorCode::kInvalidArgument, "combination has wrong arity");
  std::size_t index = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (c[i] >= dims_[i].actions.size()) throw Error(ErrorCode::kInvalidArgument, "action out of range");
    index = index * dims_[i].actions.size() + c[i];
  }
  return index;
}

Combination FactorSpace::at(std::size_t index) const {
  Combination c(dims_.size());
  for (std::size_t i = dims_.size(); i-- > 0;) {
    c[i] = index % dims_[i].actions.size();
    index /= dims_[i].actions.size();
  }
  return c;
}

std::string FactorSpace::describe(const Combination& c) const {
  std::string out;
  for (std::size_t i = 0; i < c.size() && i < dims_.size(); ++i) {
    if (i) out += '|';
    out += dims_[i].actions.at(c[i]);
  }
  return out;
}

std::vector<double> load_reward_table(const std::filesystem::path& path, const FactorSpace& space) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  const auto& dims = space.dims();
  std::vector<double> table(space.size(), std::numeric_limits<double>::quiet_NaN());
  std::string line;
  bool header = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    auto cells = detail::split(line, ',');
    for (auto& cell : cells) cell = std::string(detail::trim(cell));
    if (cells.size() != dims.size() + 1) {
      throw Error(ErrorCode::kMalformedInput, path.string() + ":" + std::to_string(line_no) +
                                                  ": expected " + std::to_string(dims.size() + 1) + " cells");
    }
    if (header) {
      header = false;
      continue;
    }
    Combination c(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i) {
      auto it = std::find(dims[i].actions.begin(), dims[i].actions.end(), cells[i]);
      if (it == dims[i].actions.end()) {
        throw Error(ErrorCode::kMalformedInput, path.string() + ":" + std::to_string(line_no) +
                                                    ": unknown action '" + cells[i] + "'");
      }
      c[i] = static_cast<std::size_t>(it - dims[i].actions.begin());
    }
    try {
      table[space.index_of(c)] = std::stod(cells.back());
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kMalformedInput,
                  path.string() + ":" + std::to_string(line_no) + ": bad reward '" + cells.back() + "'");
    }
  }
  for (double v : table) {
    if (std::isnan(v)) throw Error(ErrorCode::kMalformedInput, path.string() + ": table does not cover the space");
  }
  return table;
}

// --- value network -------------------------------------------------------------------

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct AdamSlot {
  MatrixXd m, v;
  void reset(Eigen::Index rows, Eigen::Index cols) {
    m = MatrixXd::Zero(rows, cols);
    v = MatrixXd::Zero(rows, cols);
  }
};

// in -> hidden -> ReLU -> hidden -> ReLU -> 1
class Mlp {
 public:
  Mlp(Eigen::Index in, Eigen::Index hidden, Rng& rng) {
    params_ = {init(hidden, in, in, rng), init(hidden, 1, in, rng), init(hidden, hidden, hidden, rng),
               init(hidden, 1, hidden, rng), init(1, hidden, hidden, rng), init(1, 1, hidden, rng)};
    reset_optimizer();
  }

  void reset_optimizer() {
    slots_.resize(params_.size());
    for (std::size_t i = 0; i < params_.size(); ++i) slots_[i].reset(params_[i].rows(), params_[i].cols());
    steps_ = 0;
  }

  // Columns of X are samples; returns one value per column.
  VectorXd forward(const MatrixXd& X) const {
    MatrixXd h1 = ((params_[0] * X).colwise() + VectorXd(params_[1])).cwiseMax(0.0);
    MatrixXd h2 = ((params_[2] * h1).colwise() + VectorXd(params_[3])).cwiseMax(0.0);
    MatrixXd out = (params_[4] * h2).array() + params_[5](0, 0);
    return out.row(0).transpose();
  }

  // One Adam step on the mean squared error over the columns of X.
  void step(const MatrixXd& X, const VectorXd& y, double lr) {
    const double n = static_cast<double>(X.cols());
    MatrixXd z1 = (params_[0] * X).colwise() + VectorXd(params_[1]);
    MatrixXd h1 = z1.cwiseMax(0.0);
    MatrixXd z2 = (params_[2] * h1).colwise() + VectorXd(params_[3]);
    MatrixXd h2 = z2.cwiseMax(0.0);
    VectorXd q = ((params_[4] * h2).array() + params_[5](0, 0)).row(0).transpose();

    MatrixXd d_out = (2.0 / n) * (q - y).transpose();  // 1 x n
    std::vector<MatrixXd> grads(params_.size());
    grads[4] = d_out * h2.transpose();
    grads[5] = d_out.rowwise().sum();
    MatrixXd d_h2 = params_[4].transpose() * d_out;
    MatrixXd d_z2 = d_h2.cwiseProduct((z2.array() > 0.0).cast<double>().matrix());
    grads[2] = d_z2 * h1.transpose();
    grads[3] = d_z2.rowwise().sum();
    MatrixXd d_h1 = params_[2].transpose() * d_z2;
    MatrixXd d_z1 = d_h1.cwiseProduct((z1.array() > 0.0).cast<double>().matrix());
    grads[0] = d_z1 * X.transpose();
    grads[1] = d_z1.rowwise().sum();

    constexpr double kBeta1 = 0.9, kBeta2 = 0.999, kEps = 1e-8;
    ++steps_;
    const double c1 = 1.0 - std::pow(kBeta1, static_cast<double>(steps_));
    const double c2 = 1.0 - std::pow(kBeta2, static_cast<double>(steps_));
    for (std::size_t i = 0; i < params_.size(); ++i) {
      slots_[i].m = kBeta1 * slots_[i].m + (1.0 - kBeta1) * grads[i];
      slots_[i].v = kBeta2 * slots_[i].v + (1.0 - kBeta2) * grads[i].cwiseProduct(grads[i]);
      params_[i].array() -=
          lr * (slots_[i].m.array() / c1) / ((slots_[i].v.array() / c2).sqrt() + kEps);
    }
  }

 private:
  // Uniform(-1/sqrt(fan_in), 1/sqrt(fan_in)).
  static MatrixXd init(Eigen::Index rows, Eigen::Index cols, Eigen::Index fan_in, Rng& rng) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
    std::uniform_real_distribution<double> u(-bound, bound);
    MatrixXd m(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
      for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = u(rng);
    }
    return m;
  }

  std::vector<MatrixXd> params_;  // W1 b1 W2 b2 W3 b3
  std::vector<AdamSlot> slots_;
  long steps_ = 0;
};

class Encoder {
 public:
  Encoder(const SearchState& s0, const FactorSpace& space) : space_(space) {
    offsets_.push_back(kAllTasks.size() + kAllDifficulties.size());
    for (const auto& d : space.dims()) offsets_.push_back(offsets_.back() + d.actions.size());
    base_ = VectorXd::Zero(static_cast<Eigen::Index>(offsets_.back()));
    base_(static_cast<Eigen::Index>(s0.task)) = 1.0;
    base_(static_cast<Eigen::Index>(kAllTasks.size() + static_cast<std::size_t>(s0.split))) = 1.0;
  }

  // Input width of Q_t.
  Eigen::Index width(std::size_t t) const { return static_cast<Eigen::Index>(offsets_[t + 1]); }

  // One column per candidate action of dimension t, after `prefix`.
  MatrixXd candidates(const Combination& prefix, std::size_t t) const {
    const std::size_t count = space_.dims()[t].actions.size();
    VectorXd x = base_.head(width(t));
    for (std::size_t j = 0; j < t; ++j) x(static_cast<Eigen::Index>(offsets_[j] + prefix[j])) = 1.0;
    MatrixXd X = x.replicate(1, static_cast<Eigen::Index>(count));
    for (std::size_t a = 0; a < count; ++a) {
      X(static_cast<Eigen::Index>(offsets_[t] + a), static_cast<Eigen::Index>(a)) = 1.0;
    }
    return X;
  }

 private:
  const FactorSpace& space_;
  std::vector<std::size_t> offsets_;
  VectorXd base_;
};

std::size_t argmax(const VectorXd& v) {
  Eigen::Index best = 0;
  v.maxCoeff(&best);
  return static_cast<std::size_t>(best);
}

// Regresses every Q_t onto the optimal-completion values implied by
// `values` (indexed like FactorSpace::index_of) until the greedy path
// reaches the table's argmax.
void pretrain(std::vector<Mlp>& nets, const Encoder& enc, const FactorSpace& space,
              const std::vector<double>& values, double lr) {
  const auto& dims = space.dims();
  const std::size_t T = dims.size();
  // level[t][p]: best value reachable from prefix p of length t + 1.
  std::vector<std::vector<double>> level(T);
  level[T - 1] = values;
  for (std::size_t t = T - 1; t-- > 0;) {
    const std::size_t fan = dims[t + 1].actions.size();
    level[t].assign(level[t + 1].size() / fan, -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < level[t + 1].size(); ++i) {
      level[t][i / fan] = std::max(level[t][i / fan], level[t + 1][i]);
    }
  }
  const std::size_t target = static_cast<std::size_t>(
      std::max_element(values.begin(), values.end()) - values.begin());
  const Combination best = space.at(target);

  for (std::size_t t = 0; t < T; ++t) {
    const std::size_t count = level[t].size();
    const std::size_t fan = dims[t].actions.size();
    MatrixXd X(enc.width(t), static_cast<Eigen::Index>(count));
    VectorXd y(static_cast<Eigen::Index>(count));
    for (std::size_t p = 0; p < count / fan; ++p) {
      // Decode the length-t prefix p.
      Combination prefix(t);
      std::size_t rest = p;
      for (std::size_t j = t; j-- > 0;) {
        prefix[j] = rest % dims[j].actions.size();
        rest /= dims[j].actions.size();
      }
      X.middleCols(static_cast<Eigen::Index>(p * fan), static_cast<Eigen::Index>(fan)) =
          enc.candidates(prefix, t);
      for (std::size_t a = 0; a < fan; ++a) {
        y(static_cast<Eigen::Index>(p * fan + a)) = level[t][p * fan + a];
      }
    }
    Combination path_prefix(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(t));
    const MatrixXd on_path = enc.candidates(path_prefix, t);
    for (int iter = 0; iter < 5000; ++iter) {
      nets[t].step(X, y, lr);
      if (iter % 25 == 24) {
        const double rmse = std::sqrt((nets[t].forward(X) - y).squaredNorm() / static_cast<double>(count));
        if (rmse < 0.02 && argmax(nets[t].forward(on_path)) == best[t]) break;
      }
    }
    nets[t].reset_optimizer();
  }
}

}  // namespace

// --- search -------------------------------------------------------------------

SearchResult run_dqn(const SearchState& s0, const FactorSpace& space, const RewardFn& reward_fn,
                     const DqnConfig& config) {
  if (space.dims().empty()) throw Error(ErrorCode::kEmptyFactor, "factor space has no dimensions");
  const auto& dims = space.dims();
  const std::size_t T = dims.size();
  Rng rng(config.seed);
  Encoder enc(s0, space);
  std::vector<Mlp> nets;
  nets.reserve(T);
  for (std::size_t t = 0; t < T; ++t) nets.emplace_back(enc.width(t), static_cast<Eigen::Index>(config.hidden), rng);

  if (config.initial_values) {
    std::vector<double> values(space.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = config.initial_values(space.at(i));
    pretrain(nets, enc, space, values, 0.01);
  }

  SearchResult result;
  result.space_size = space.size();
  result.best_reward = -std::numeric_limits<double>::infinity();
  std::map<std::size_t, double> seen;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  double epsilon = config.epsilon_start;

  for (std::size_t episode = 0; episode < config.episodes; ++episode) {
    Combination combo;
    std::vector<MatrixXd> inputs(T);
    for (std::size_t t = 0; t < T; ++t) {
      inputs[t] = enc.candidates(combo, t);
      std::size_t action;
      if (coin(rng) < epsilon) {
        action = std::uniform_int_distribution<std::size_t>(0, dims[t].actions.size() - 1)(rng);
      } else {
        action = argmax(nets[t].forward(inputs[t]));
      }
      combo.push_back(action);
    }

    const std::size_t index = space.index_of(combo);
    auto [it, fresh] = seen.try_emplace(index, 0.0);
    if (fresh) it->second = reward_fn(combo);
    const double reward = it->second;

    // Last epoch first, so each target sees its successor's update.
    for (std::size_t t = T; t-- > 0;) {
      double target = reward;
      if (t + 1 < T) target = nets[t + 1].forward(inputs[t + 1]).maxCoeff();
      const Eigen::Index a = static_cast<Eigen::Index>(combo[t]);
      nets[t].step(inputs[t].col(a), VectorXd::Constant(1, target), config.learning_rate);
    }

    if (reward > result.best_reward) {
      result.best_reward = reward;
      result.best = combo;
    }
    result.log.push_back(EpisodeLog{episode, combo, reward, epsilon, fresh, seen.size(), result.best_reward});

    if (config.schedule == EpsilonSchedule::kMultiplicative) {
      epsilon = std::max(config.epsilon_min, epsilon * config.decay_rate);
    } else {
      const double span = config.episodes > 1 ? static_cast<double>(config.episodes - 1) : 1.0;
      epsilon = std::max(config.epsilon_min, config.epsilon_start - (config.epsilon_start - config.epsilon_min) *
                                                                         static_cast<double>(episode + 1) / span);
    }
  }
  result.episodes = config.episodes;
  result.explored = seen.size();
  if (config.episodes == 0) result.best_reward = 0.0;
  return result;
}

SearchResult grid_search(const FactorSpace& space, const RewardFn& reward_fn) {
  SearchResult result;
  result.space_size = space.size();
  result.best_reward = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < result.space_size; ++i) {
    Combination c = space.at(i);
    const double r = reward_fn(c);
    if (r > result.best_reward) {
      result.best_reward = r;
      result.best = c;
    }
    result.log.push_back(EpisodeLog{i, std::move(c), r, 0.0, true, i + 1, result.best_reward});
  }
  result.episodes = result.space_size;
  result.explored = result.space_size;
  return result;
}

CostRate cost_rate(const SearchResult& result, double acc_max) {
  if (!(acc_max > 0.0)) throw Error(ErrorCode::kZeroDenominator, "acc_max must be positive");
  if (result.space_size == 0) throw Error(ErrorCode::kZeroDenominator, "empty search space");
  return CostRate{static_cast<double>(result.explored) / static_cast<double>(result.space_size),
                  result.best_reward / acc_max};
}

}  // namespace graphbench
