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

// Metrics of one generated summary against its topic.

#ifndef SUMMGAUGE_SYSTEM_METRICS_H_
#define SUMMGAUGE_SYSTEM_METRICS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "summgauge/corpus_metrics.h"
#include "summgauge/ingest.h"
#include "summgauge/oracle.h"
#include "summgauge/rouge.h"
#include "summgauge/textproc.h"

namespace summgauge {

struct SystemMetricsOptions {
  int segments = 3;
  std::uint64_t shuffle_seed = 13;
  RefAggregation ref_aggregation = RefAggregation::kMean;
};

// ROUGE-1 F1 of the summary against the oracle text. Throws kEmptyOracle.
double F1VsOracle(std::string_view summary, const OracleResult& oracle,
                  const TextConfig& config);

// 100 * (1 - covered / total) over summary n-grams counted with
// multiplicity. Throws kDegenerateSummary.
double SystemAbstractness(std::string_view summary, const Topic& topic, int n,
                          const TextConfig& config);

struct IddResult {
  double idd = 0.0;
  double iddv = 0.0;
  std::vector<double> per_document;  // Relevance(summary, D_j)
};

// Throws kSingleDocument, kEmptyAfterFiltering.
IddResult InterDocumentDistribution(std::string_view summary,
                                    const Topic& topic,
                                    const TextConfig& config);

double SystemRedundancy(std::string_view summary, const TextConfig& config);

// Documents are concatenated (or, with a seed, permuted and internally
// shuffled) and cut into k near-equal sentence segments. Each segment
// scores clipped unigram matches with the summary over the summary's
// unigram count.
LayoutVector SystemLayoutBias(std::string_view summary, const Topic& topic,
                              int k, std::optional<std::uint64_t> shuffle_seed,
                              const TextConfig& config);

struct TopicSystemMetrics {
  std::string topic_id;
  RougeScore rouge1;
  RougeScore rouge2;
  std::optional<double> f1_vs_oracle;
  std::map<int, std::optional<double>> sys_abstractness;
  std::optional<double> sys_redundancy;
  std::optional<double> idd;
  std::optional<double> iddv;
  LayoutVector layout;
  LayoutVector layout_shuffled;
  std::vector<std::string> notes;
};

// `oracle` may be null, which leaves f1_vs_oracle empty.
TopicSystemMetrics ComputeSystemMetrics(std::string_view summary,
                                        const Topic& topic,
                                        const OracleResult* oracle,
                                        const TextConfig& config,
                                        const SystemMetricsOptions& options);

}  // namespace summgauge

#endif  // SUMMGAUGE_SYSTEM_METRICS_H_
