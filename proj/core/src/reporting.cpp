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


#include "graphbench/reporting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "graphbench/error.hpp"
#include "text_util.hpp"

namespace graphbench {
namespace {

using Key = std::vector<std::string>;

Key key_of(const EvalRecord& r, const std::vector<Dimension>& dims) {
  Key k;
  k.reserve(dims.size());
  for (Dimension d : dims) k.push_back(dimension_value(r, d));
  return k;
}

struct Mean {
  double sum = 0.0;
  std::size_t n = 0;
  void add(double v) {
    sum += v;
    ++n;
  }
  double value() const { return n ? sum / static_cast<double>(n) : 0.0; }
};

double population_sd(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(xs.size()));
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string fixed(double v, int digits = 4) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

std::string header(const std::vector<Dimension>& group_by) {
  return detail::join(group_by, ",", [](Dimension d) { return std::string(dimension_name(d)); });
}

}  // namespace

std::string_view dimension_name(Dimension d) {
  switch (d) {
    case Dimension::kModel: return "model";
    case Dimension::kScheme: return "scheme";
    case Dimension::kFormat: return "format";
    case Dimension::kGraphType: return "graph-type";
    case Dimension::kTask: return "task";
    case Dimension::kDifficulty: return "difficulty";
  }
  return "unknown";
}

Dimension parse_dimension(std::string_view name) {
  const std::string key = detail::normalize_key(name);
  for (Dimension d : kAllDimensions) {
    if (key == dimension_name(d)) return d;
  }
  if (key == "prompt" || key == "prompt-scheme") return Dimension::kScheme;
  if (key == "serialization") return Dimension::kFormat;
  if (key == "family" || key == "graph") return Dimension::kGraphType;
  if (key == "split") return Dimension::kDifficulty;
  throw Error(ErrorCode::kInvalidArgument, "unknown pivot '" + std::string(name) + "'");
}

const std::string& dimension_value(const EvalRecord& r, Dimension d) {
  switch (d) {
    case Dimension::kModel: return r.model;
    case Dimension::kScheme: return r.scheme;
    case Dimension::kFormat: return r.format;
    case Dimension::kGraphType: return r.graph_type;
    case Dimension::kTask: return r.task;
    case Dimension::kDifficulty: return r.difficulty;
  }
  return r.model;
}

std::vector<GroupRow> aggregate(const std::vector<EvalRecord>& records, const std::vector<Dimension>& group_by,
                                const AggregateOptions& options) {
  if (records.empty()) throw Error(ErrorCode::kEmptyGroup, "no records to aggregate");
  std::vector<Dimension> rest;
  for (Dimension d : kAllDimensions) {
    if (std::find(group_by.begin(), group_by.end(), d) == group_by.end()) rest.push_back(d);
  }

  std::map<Key, std::map<Key, Mean>> cells;
  std::map<Key, std::size_t> counts;
  std::size_t serial = 0;
  for (const auto& r : records) {
    Key group = key_of(r, group_by);
    Key unit = options.per_query ? Key{std::to_string(serial++)} : key_of(r, rest);
    cells[group][unit].add(r.score);
    ++counts[group];
  }

  std::vector<GroupRow> rows;
  for (const auto& [group, units] : cells) {
    std::vector<double> means;
    for (const auto& [unit, m] : units) means.push_back(m.value());
    const double c = static_cast<double>(means.size());
    double mean = 0.0;
    for (double v : means) mean += v;
    mean /= c;
    double margin = 0.0;
    if (means.size() > 1) {
      double ss = 0.0;
      for (double v : means) ss += (v - mean) * (v - mean);
      margin = 1.96 * std::sqrt(ss / (c - 1.0)) / std::sqrt(c);
    }
    rows.push_back(GroupRow{group, mean, margin, means.size(), counts[group]});
  }
  return rows;
}

std::string_view quadrant_name(Quadrant q) {
  switch (q) {
    case Quadrant::kRobust: return "Robust";
    case Quadrant::kPromptCritical: return "Prompt-Critical";
    case Quadrant::kFormatCritical: return "Format-Critical";
    case Quadrant::kBothCritical: return "Both Critical";
  }
  return "unknown";
}

std::vector<SensitivityRow> sensitivity(const std::vector<EvalRecord>& records, std::string_view task,
                                        std::string_view split) {
  // family -> scheme -> format -> accuracy
  std::map<std::string, std::map<std::string, std::map<std::string, Mean>>> grid;
  for (const auto& r : records) {
    if (r.task != task || r.difficulty != split) continue;
    grid[r.graph_type][r.scheme][r.format].add(r.score);
  }
  if (grid.empty()) {
    throw Error(ErrorCode::kInsufficientCoverage,
                "no records for " + std::string(task) + "/" + std::string(split));
  }

  std::vector<SensitivityRow> rows;
  for (const auto& [family, by_scheme] : grid) {
    std::set<std::string> formats;
    for (const auto& [scheme, by_format] : by_scheme) {
      for (const auto& [format, m] : by_format) formats.insert(format);
    }
    if (by_scheme.size() < 2 || formats.size() < 2) {
      throw Error(ErrorCode::kInsufficientCoverage, family + " needs at least two schemes and two formats");
    }
    for (const auto& [scheme, by_format] : by_scheme) {
      if (by_format.size() != formats.size()) {
        throw Error(ErrorCode::kInsufficientCoverage, family + "/" + scheme + " misses some formats");
      }
    }
    double sp = 0.0;
    for (const auto& format : formats) {
      std::vector<double> across;
      for (const auto& [scheme, by_format] : by_scheme) across.push_back(by_format.at(format).value());
      sp += population_sd(across);
    }
    double sf = 0.0;
    for (const auto& [scheme, by_format] : by_scheme) {
      std::vector<double> across;
      for (const auto& [format, m] : by_format) across.push_back(m.value());
      sf += population_sd(across);
    }
    rows.push_back(SensitivityRow{family, sp / static_cast<double>(formats.size()),
                                  sf / static_cast<double>(by_scheme.size()), Quadrant::kRobust});
  }

  std::vector<double> sps, sfs;
  for (const auto& r : rows) {
    sps.push_back(r.s_prompt);
    sfs.push_back(r.s_format);
  }
  const double mp = median(sps), mf = median(sfs);
  for (auto& r : rows) {
    const bool p = r.s_prompt > 0.0 && r.s_prompt >= mp;
    const bool f = r.s_format > 0.0 && r.s_format >= mf;
    r.quadrant = p && f ? Quadrant::kBothCritical
                 : p    ? Quadrant::kPromptCritical
                 : f    ? Quadrant::kFormatCritical
                        : Quadrant::kRobust;
  }
  return rows;
}

TokenReport token_report(const std::vector<EvalRecord>& records, const std::vector<Dimension>& group_by) {
  TokenReport report;
  std::map<Key, Mean> groups;
  for (const auto& r : records) {
    if (!r.tokens_out) {
      ++report.excluded;
      continue;
    }
    groups[key_of(r, group_by)].add(static_cast<double>(*r.tokens_out));
  }
  for (const auto& [key, m] : groups) report.rows.push_back(TokenRow{key, m.value(), m.n});
  return report;
}

std::string to_csv(const std::vector<GroupRow>& rows, const std::vector<Dimension>& group_by) {
  std::ostringstream os;
  const std::string h = header(group_by);
  os << h << (h.empty() ? "" : ",") << "mean,ci95,units,records\n";
  for (const auto& r : rows) {
    for (const auto& k : r.key) os << csv_cell(k) << ',';
    os << fixed(r.mean) << ',' << fixed(r.margin) << ',' << r.units << ',' << r.records << '\n';
  }
  return os.str();
}

std::string to_csv(const std::vector<SensitivityRow>& rows) {
  std::ostringstream os;
  os << "graph-type,s_prompt,s_format,quadrant\n";
  for (const auto& r : rows) {
    os << csv_cell(r.graph_type) << ',' << fixed(r.s_prompt) << ',' << fixed(r.s_format) << ','
       << quadrant_name(r.quadrant) << '\n';
  }
  return os.str();
}

std::string to_csv(const TokenReport& report, const std::vector<Dimension>& group_by) {
  std::ostringstream os;
  const std::string h = header(group_by);
  os << h << (h.empty() ? "" : ",") << "mean_tokens_out,records\n";
  for (const auto& r : report.rows) {
    for (const auto& k : r.key) os << csv_cell(k) << ',';
    os << fixed(r.mean_tokens_out, 2) << ',' << r.records << '\n';
  }
  return os.str();
}

std::string heatmap_csv(const std::vector<EvalRecord>& records) {
  std::map<std::string, std::map<std::string, Mean>> cells;
  std::set<std::string> formats;
  for (const auto& r : records) {
    cells[r.scheme][r.format].add(r.score);
    formats.insert(r.format);
  }
  std::ostringstream os;
  os << "scheme";
  for (const auto& f : formats) os << ',' << csv_cell(f);
  os << '\n';
  for (const auto& [scheme, row] : cells) {
    os << csv_cell(scheme);
    for (const auto& f : formats) {
      os << ',';
      if (auto it = row.find(f); it != row.end()) os << fixed(it->second.value());
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace graphbench
