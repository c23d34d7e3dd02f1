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


// Pivot tables, sensitivity quadrants and token usage over result records.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphbench/pipeline.hpp"

namespace graphbench {

enum class Dimension { kModel, kScheme, kFormat, kGraphType, kTask, kDifficulty };

inline constexpr std::array<Dimension, 6> kAllDimensions = {
    Dimension::kModel, Dimension::kScheme,  Dimension::kFormat,
    Dimension::kGraphType, Dimension::kTask, Dimension::kDifficulty};

std::string_view dimension_name(Dimension d);  // "model", "scheme", "format", "graph-type", ...
Dimension parse_dimension(std::string_view name);
const std::string& dimension_value(const EvalRecord& r, Dimension d);

struct GroupRow {
  std::vector<std::string> key;  // one value per group_by dimension
  double mean = 0.0;
  double margin = 0.0;  // 95% CI half-width
  std::size_t units = 0;  // combinations (or records with per_query)
  std::size_t records = 0;
};

struct AggregateOptions {
  // CI over raw records instead of over combination means.
  bool per_query = false;
};

// Within each group, records are first averaged per combination of the
// dimensions not grouped on; the row mean and margin
// 1.96 * sd / sqrt(c) are taken over those c combination means (sample sd).
// Rows are sorted by key. Throws Error(kEmptyGroup) on an empty input.
std::vector<GroupRow> aggregate(const std::vector<EvalRecord>& records, const std::vector<Dimension>& group_by,
                                const AggregateOptions& options = {});

enum class Quadrant { kRobust, kPromptCritical, kFormatCritical, kBothCritical };
std::string_view quadrant_name(Quadrant q);  // "Robust", "Prompt-Critical", ...

struct SensitivityRow {
  std::string graph_type;
  double s_prompt = 0.0;  // mean over formats of the stddev across schemes
  double s_format = 0.0;  // mean over schemes of the stddev across formats
  Quadrant quadrant = Quadrant::kRobust;
};

// Standard deviations are population ones. A family is critical on an
// axis when its value is positive and at least the median across families.
// Throws Error(kInsufficientCoverage) unless every family has a full
// scheme x format grid with at least two of each.
std::vector<SensitivityRow> sensitivity(const std::vector<EvalRecord>& records, std::string_view task,
                                        std::string_view split);

struct TokenRow {
  std::vector<std::string> key;
  double mean_tokens_out = 0.0;
  std::size_t records = 0;
};

struct TokenReport {
  std::vector<TokenRow> rows;
  std::size_t excluded = 0;  // records without reported usage
};

TokenReport token_report(const std::vector<EvalRecord>& records, const std::vector<Dimension>& group_by);

// --- CSV --------------------------------------------------------------------------

std::string to_csv(const std::vector<GroupRow>& rows, const std::vector<Dimension>& group_by);
std::string to_csv(const std::vector<SensitivityRow>& rows);
std::string to_csv(const TokenReport& report, const std::vector<Dimension>& group_by);
// Scheme rows x format columns of mean accuracy; empty cells left blank.
std::string heatmap_csv(const std::vector<EvalRecord>& records);

}  // namespace graphbench
