// Copyright 2026 The summgauge Authors.
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

#ifndef SUMMGAUGE_SENTENCES_H_
#define SUMMGAUGE_SENTENCES_H_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "summgauge/ingest.h"
#include "summgauge/textproc.h"

namespace summgauge {

struct SentenceRef {
  std::size_t doc = 0;
  std::size_t sentence = 0;

  auto operator<=>(const SentenceRef&) const = default;
};

// A candidate-document sentence with its raw text and tokens.
struct SourceSentence {
  SentenceRef ref;
  std::string text;
  std::vector<std::string> tokens;

  std::size_t words() const { return tokens.size(); }
};

// All document sentences of a topic in (doc, sentence) order.
std::vector<SourceSentence> CollectSentences(const Topic& topic,
                                             const TextConfig& config);

std::size_t WordCount(std::string_view text);

// Mean reference length in words, rounded half up, at least 1.
int DefaultBudgetWords(const Topic& topic);

// Budget rule shared by the oracle and the baselines: a sentence fits when
// the selection is empty or the running total stays within budget.
inline bool FitsBudget(std::size_t used, std::size_t words, bool empty,
                       int budget) {
  return empty || used + words <= static_cast<std::size_t>(budget);
}

std::string JoinTexts(const std::vector<const SourceSentence*>& sentences);

}  // namespace summgauge

#endif  // SUMMGAUGE_SENTENCES_H_
