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


// Prompt composition: task wording, the nine prompt schemes, few-shot
// exemplar banks and the sentence/QA/word/case decoration factors.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphbench/query.hpp"
#include "graphbench/serializers.hpp"
#include "graphbench/tasks.hpp"

namespace graphbench {

enum class PromptScheme {
  kZeroShot,
  kZeroCoT,
  kZeroInstruct,
  kZeroAlgorithm,
  kLTM,
  kKShot,
  kCoT,
  kInstruct,
  kAlgorithm,
};

inline constexpr std::array<PromptScheme, 9> kAllSchemes = {
    PromptScheme::kZeroShot, PromptScheme::kZeroCoT, PromptScheme::kZeroInstruct,
    PromptScheme::kZeroAlgorithm, PromptScheme::kLTM, PromptScheme::kKShot,
    PromptScheme::kCoT, PromptScheme::kInstruct, PromptScheme::kAlgorithm,
};

// "0-shot", "0-CoT", "0-Instruct", "0-Algorithm", "LTM", "k-shot", "CoT",
// "Instruct", "Algorithm".
std::string_view scheme_name(PromptScheme scheme);
PromptScheme parse_scheme(std::string_view name);  // case-insensitive

// How an exemplar's gold answer is written out.
enum class AnswerStyle { kTerse, kCoT, kInstruct, kAlgorithm };
inline constexpr std::array<AnswerStyle, 4> kAllAnswerStyles = {
    AnswerStyle::kTerse, AnswerStyle::kCoT, AnswerStyle::kInstruct, AnswerStyle::kAlgorithm};

// Style of the exemplars a scheme prepends; nullopt for zero-shot schemes.
std::optional<AnswerStyle> exemplar_style(PromptScheme scheme);

// The scheme sharing this one's layout without (or with) exemplars.
PromptScheme zero_shot_counterpart(PromptScheme scheme);

std::string question_text(TaskKind task, const TaskParams& params);
std::string framing_text(TaskKind task, const TaskParams& params);
std::string_view algorithm_text(TaskKind task);

// Gold answer written from the oracle's solution.
std::string answer_text(const QuerySpec& query, AnswerStyle style);

// --- Decoration ---------------------------------------------------------------

enum class CaseStyle { kNoChange, kTitle, kUpper, kLower };

inline constexpr std::array<std::string_view, 10> kSentenceSeparators = {
    " -- ", " <sep> ", " , ", " \n ", " \n", "\t", " ; \n", " ", " . ", " || "};
inline constexpr std::array<std::string_view, 10> kQaSeparators = {
    " \n\t", " \n ", " : ", " :: ", " \t", " ::", " ", " - ", " :", " ::: "};
inline constexpr std::array<std::string_view, 3> kWordSeparators = {" ", "  ", "\t"};
inline constexpr std::array<CaseStyle, 4> kCaseStyles = {CaseStyle::kNoChange, CaseStyle::kTitle,
                                                         CaseStyle::kUpper, CaseStyle::kLower};

std::string_view case_style_name(CaseStyle style);  // "none", "title", "upper", "lower"

// Unset fields keep the undecorated text, so a default-constructed value is
// the identity decoration.
struct DecorationFactors {
  std::optional<std::string> sentence_separator;
  std::optional<std::string> qa_separator;
  std::optional<std::string> word_separator;
  CaseStyle case_style = CaseStyle::kNoChange;
};

std::string apply_case(std::string_view text, CaseStyle style);

// --- Exemplars ------------------------------------------------------------------

struct Exemplar {
  QuerySpec query;
  std::string answer;
};

// k exemplars on Easy graphs drawn from a seed domain disjoint from corpus
// items. Every answer is checked with extract() + score() before it is
// returned; a failing exemplar raises Error(kInvalidGraph).
std::vector<Exemplar> build_exemplars(TaskKind task, AnswerStyle style, std::size_t k,
                                      std::uint64_t seed);

class ExemplarBank {
 public:
  ExemplarBank() = default;
  // Every task x answer style, k exemplars each.
  static ExemplarBank build(std::uint64_t seed, std::size_t k = 5);

  void set(TaskKind task, AnswerStyle style, std::vector<Exemplar> exemplars);
  // Empty vector when nothing was stored for the pair.
  const std::vector<Exemplar>& get(TaskKind task, AnswerStyle style) const;

 private:
  std::map<std::pair<TaskKind, AnswerStyle>, std::vector<Exemplar>> exemplars_;
};

// --- Composition ------------------------------------------------------------------

struct RenderedPrompt {
  std::string text;
  std::string graph_text;  // serialize(query.graph, format), embedded verbatim
  PromptScheme scheme;
  SerializationFormat format;
};

// Layout, with every "\n\n" a sentence join:
//   [algorithm block \n\n] [exemplar \n\n]* framing And the graph
//   representation of: <Format> is \n<graph>\n\nQ: <question>\n\nA:[suffix]
// Decoration touches everything except graph renderings. Throws
// Error(kEmptyBank) when the scheme needs exemplars and the bank has none.
RenderedPrompt compose_prompt(const QuerySpec& query, PromptScheme scheme, SerializationFormat format,
                              const ExemplarBank& bank, const DecorationFactors& decoration = {},
                              const SerializeOptions& serialize_options = {});

}  // namespace graphbench
