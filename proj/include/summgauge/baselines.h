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

// Extractive reference summarizers: LexRank, TextRank, MMR and a greedy
// concept-coverage approximation of ICSISumm.

#ifndef SUMMGAUGE_BASELINES_H_
#define SUMMGAUGE_BASELINES_H_

#include <string>
#include <string_view>
#include <vector>

#include "summgauge/ingest.h"
#include "summgauge/sentences.h"
#include "summgauge/textproc.h"

namespace summgauge {

enum class Algorithm { kLexRank, kTextRank, kMmr, kGreedyConcept };

std::string_view AlgorithmName(Algorithm algorithm);
// Throws kUnknownAlgorithm naming the supported algorithms.
Algorithm ParseAlgorithm(std::string_view name);
std::vector<std::string> SupportedAlgorithms();

struct SummarizerConfig {
  Algorithm algorithm = Algorithm::kLexRank;
  // <= 0 selects the mean reference length.
  int budget_words = 0;
  double damping = 0.85;
  double cosine_threshold = 0.1;
  double mmr_lambda = 0.5;
  int max_iterations = 100;
  double epsilon = 1e-6;

  void Validate() const;
};

struct Summary {
  std::string text;  // selected sentences in document order
  std::vector<SentenceRef> selected;  // selection order
  std::vector<std::string> warnings;
};

// Stationary distribution of a damped random walk over a weighted graph.
// weights[i][j] is the edge weight from i to j; rows with no weight jump
// uniformly. Iterates from the uniform vector until the L1 change drops
// below epsilon or max_iterations is reached.
std::vector<double> PowerIteration(
    const std::vector<std::vector<double>>& weights, double damping,
    int max_iterations, double epsilon);

// Unweighted graph linking sentence pairs whose TF-IDF cosine is at least
// the threshold; no self loops.
std::vector<std::vector<double>> LexRankGraph(
    const std::vector<std::vector<std::string>>& sentence_terms,
    double cosine_threshold);

// Distinct shared terms over log|a| + log|b|; 0 when the denominator is
// not positive (single-term sentences).
double TextRankSimilarity(const std::vector<std::string>& a,
                          const std::vector<std::string>& b);

// Each throws kNoSentences for a topic without sentences.
Summary LexRank(const Topic& topic, const SummarizerConfig& cfg,
                const TextConfig& config);
Summary TextRank(const Topic& topic, const SummarizerConfig& cfg,
                 const TextConfig& config);
Summary Mmr(const Topic& topic, const SummarizerConfig& cfg,
            const TextConfig& config);
Summary GreedyConcept(const Topic& topic, const SummarizerConfig& cfg,
                      const TextConfig& config);

Summary Summarize(const Topic& topic, const SummarizerConfig& cfg,
                  const TextConfig& config);

}  // namespace summgauge

#endif  // SUMMGAUGE_BASELINES_H_
