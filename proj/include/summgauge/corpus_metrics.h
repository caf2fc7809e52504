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

// Corpus-quality metrics computed per topic from candidate documents and
// reference summaries. Multi-reference topics are scored per reference and
// averaged.

#ifndef SUMMGAUGE_CORPUS_METRICS_H_
#define SUMMGAUGE_CORPUS_METRICS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "summgauge/ingest.h"
#include "summgauge/textproc.h"

namespace summgauge {

// Per-segment values; nullopt marks a segment with no sentences.
using LayoutVector = std::vector<std::optional<double>>;

struct CorpusMetricsOptions {
  int segments = 3;
  double jaccard_threshold = 0.6;
  bool per_document_redundancy = false;
  bool normalized_inverse_pyramid = false;
  bool pairwise_relevance = true;

  void Validate() const;
};

// Percentage of distinct reference n-grams absent from every document.
// Throws kDegenerateReference when a reference has fewer than n terms.
double Abstractness(const Topic& topic, int n, const TextConfig& config);

// Sum over units of P_a(w) * log P_b(w); terms with P_a(w) = 0 vanish.
// Equals minus the cross-entropy. Throws kVocabularyMismatch.
double Relevance(const UnitDistribution& a, const UnitDistribution& b,
                 LogBase base = LogBase::kNatural);

struct IdsResult {
  double ids = 0.0;
  std::vector<double> per_document;
  // pairwise[j][i] = Relevance(D_j, D_i); the diagonal is empty.
  std::vector<std::vector<std::optional<double>>> pairwise;
};

// Each pair is smoothed with config.smoothing_alpha over the pair's union
// vocabulary. Throws kSingleDocument, kEmptyAfterFiltering.
IdsResult InterDocumentSimilarity(const Topic& topic, const TextConfig& config);

// Sum of P log P of the unsmoothed unit distribution; <= 0, and 0 only for
// a single repeated unit. Throws kEmptyAfterFiltering.
double TextRedundancy(const std::vector<std::string>& texts,
                      const TextConfig& config);

// Over the concatenated documents, or the mean of per-document values.
double Redundancy(const Topic& topic, const TextConfig& config,
                  bool per_document = false);

// Reference SCU weight over the best attainable weight for the same number
// of SCUs, in [0, 1].
double PyramidScore(const std::string& reference, const Pyramid& pyramid,
                    const TextConfig& config, double jaccard_threshold);
double PyramidScore(const Topic& topic, const Pyramid& pyramid,
                    const TextConfig& config, double jaccard_threshold);

// Population variance over documents of the number of reference-matched
// SCUs each document contains. Throws kSingleDocument.
double InversePyramid(const Topic& topic, const Pyramid& pyramid,
                      const TextConfig& config, double jaccard_threshold,
                      bool normalized = false);

// Sizes of k contiguous segments over count items; earlier segments take
// the remainder (7 items, k = 3 -> 3, 2, 2).
std::vector<std::size_t> SegmentSizes(std::size_t count, int k);

// Mean positional importance per segment: each document sentence scores
// its best TF-IDF cosine against the reference sentences.
LayoutVector LayoutBias(const Topic& topic, int k, const TextConfig& config);

// Total document words over mean reference words.
double CompressionFactor(const Topic& topic);

struct TopicCorpusMetrics {
  std::string topic_id;
  std::map<int, std::optional<double>> abstractness;
  std::optional<double> ids;
  std::optional<double> redundancy;
  std::optional<double> pyramid;
  std::optional<double> inv_pyramid;
  LayoutVector layout;
  std::optional<double> compression;
  std::vector<std::vector<std::optional<double>>> pairwise_relevance;
  // Classified reasons for null values, e.g. "ids: SingleDocument".
  std::vector<std::string> notes;
};

// Never throws for per-metric failures; those become nulls plus notes.
TopicCorpusMetrics ComputeCorpusMetrics(const Topic& topic,
                                        const TextConfig& config,
                                        const CorpusMetricsOptions& options);

}  // namespace summgauge

#endif  // SUMMGAUGE_CORPUS_METRICS_H_
