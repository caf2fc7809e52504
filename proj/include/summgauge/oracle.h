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

// Extractive oracle: the source-sentence subset with maximal ROUGE-N recall
// against the references under a word budget.

#ifndef SUMMGAUGE_ORACLE_H_
#define SUMMGAUGE_ORACLE_H_

#include <string>
#include <string_view>
#include <vector>

#include "summgauge/ingest.h"
#include "summgauge/rouge.h"
#include "summgauge/sentences.h"
#include "summgauge/textproc.h"

namespace summgauge {

enum class OracleMethod { kGreedy, kExact };

std::string_view OracleMethodName(OracleMethod method);

struct OracleOptions {
  int n = 1;
  // <= 0 selects the mean reference length.
  int budget_words = 0;
  // Keep adding zero-gain sentences until nothing fits.
  bool fill_budget = false;
  // Largest instance ExactOracle accepts.
  int max_sentences = 14;
};

struct OracleResult {
  std::vector<SentenceRef> selected;  // greedy: selection order
  RougeScore score;
  int budget = 0;
  int budget_used = 0;
  OracleMethod method = OracleMethod::kGreedy;
  std::string text;  // selected sentences joined with spaces
};

// Repeatedly adds the fitting sentence with the largest recall gain; ties go
// to the lower (doc, sentence). Stops at zero gain or when nothing fits.
// Throws kNoSentences.
OracleResult GreedyOracle(const Topic& topic, const OracleOptions& options,
                          const TextConfig& config);

// Exhaustive search over budget-feasible subsets; ties go to the
// lexicographically smallest index set. Throws kTooLarge, kNoSentences.
OracleResult ExactOracle(const Topic& topic, const OracleOptions& options,
                         const TextConfig& config);

}  // namespace summgauge

#endif  // SUMMGAUGE_ORACLE_H_
