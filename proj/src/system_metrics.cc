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

#include "summgauge/system_metrics.h"

#include <numeric>
#include <set>

#include "summgauge/error.h"
#include "summgauge/shuffle.h"

namespace summgauge {
namespace {

template <typename Fn>
void Capture(std::vector<std::string>& notes, const std::string& metric,
             Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    notes.push_back(metric + ": " + std::string(ErrorKindName(e.kind())));
  }
}

}  // namespace

double F1VsOracle(std::string_view summary, const OracleResult& oracle,
                  const TextConfig& config) {
  if (oracle.selected.empty()) {
    throw Error(ErrorKind::kEmptyOracle, "oracle selected no sentences");
  }
  return RougeN(summary, {oracle.text}, 1, config).f1;
}

double SystemAbstractness(std::string_view summary, const Topic& topic, int n,
                          const TextConfig& config) {
  const std::vector<std::string> terms = NgramTerms(summary, config);
  if (terms.size() < static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::kDegenerateSummary,
                "summary shorter than " + std::to_string(n) + " terms");
  }
  std::set<std::string> source;
  for (const std::string& document : topic.documents) {
    std::set<std::string> grams = NgramSet(NgramTerms(document, config), n);
    source.insert(grams.begin(), grams.end());
  }
  int covered = 0;
  int total = 0;
  for (const auto& [gram, count] : CountNgrams(terms, n)) {
    total += count;
    if (source.count(gram) > 0) covered += count;
  }
  return 100.0 * (1.0 - static_cast<double>(covered) / total);
}

IddResult InterDocumentDistribution(std::string_view summary,
                                    const Topic& topic,
                                    const TextConfig& config) {
  if (topic.documents.size() < 2) {
    throw Error(ErrorKind::kSingleDocument,
                "topic '" + topic.topic_id + "' has a single document");
  }
  const UnitCounts summary_counts = CountUnits({std::string(summary)}, config);
  IddResult result;
  for (const std::string& document : topic.documents) {
    const UnitCounts document_counts = CountUnits({document}, config);
    const std::set<std::string> vocabulary =
        UnionVocabulary(summary_counts, document_counts);
    const UnitDistribution ps =
        BuildDistribution(summary_counts, vocabulary, config.smoothing_alpha);
    const UnitDistribution pd =
        BuildDistribution(document_counts, vocabulary, config.smoothing_alpha);
    result.per_document.push_back(Relevance(ps, pd, config.log_base));
  }
  const double count = static_cast<double>(result.per_document.size());
  result.idd = std::accumulate(result.per_document.begin(),
                               result.per_document.end(), 0.0) /
               count;
  double sum = 0.0;
  for (double r : result.per_document) sum += (r - result.idd) * (r - result.idd);
  result.iddv = sum / count;
  return result;
}

double SystemRedundancy(std::string_view summary, const TextConfig& config) {
  return TextRedundancy({std::string(summary)}, config);
}

LayoutVector SystemLayoutBias(std::string_view summary, const Topic& topic,
                              int k, std::optional<std::uint64_t> shuffle_seed,
                              const TextConfig& config) {
  if (k < 2) throw Error(ErrorKind::kInvalidConfig, "segments must be >= 2");
  std::vector<std::size_t> order(topic.documents.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::optional<Rng> rng;
  if (shuffle_seed) {
    rng.emplace(TopicSeed(*shuffle_seed, topic.topic_id));
    Shuffle(order, *rng);
  }
  std::vector<std::vector<std::string>> sentences;
  for (std::size_t d : order) {
    std::vector<std::vector<std::string>> doc_sentences;
    for (const Sentence& s : SegmentSentences(topic.documents[d], config)) {
      doc_sentences.push_back(NgramTerms(s.tokens, config));
    }
    if (rng) Shuffle(doc_sentences, *rng);
    for (auto& s : doc_sentences) sentences.push_back(std::move(s));
  }

  const NgramCounts summary_counts = CountNgrams(NgramTerms(summary, config), 1);
  const int summary_total = TotalCount(summary_counts);
  const std::vector<std::size_t> sizes = SegmentSizes(sentences.size(), k);
  LayoutVector layout(sizes.size());
  std::size_t pos = 0;
  for (std::size_t seg = 0; seg < sizes.size(); ++seg) {
    if (sizes[seg] == 0) continue;
    NgramCounts segment_counts;
    for (std::size_t i = pos; i < pos + sizes[seg]; ++i) {
      for (const std::string& t : sentences[i]) ++segment_counts[t];
    }
    pos += sizes[seg];
    layout[seg] =
        summary_total == 0
            ? 0.0
            : static_cast<double>(ClippedMatches(summary_counts, segment_counts)) /
                  summary_total;
  }
  return layout;
}

TopicSystemMetrics ComputeSystemMetrics(std::string_view summary,
                                        const Topic& topic,
                                        const OracleResult* oracle,
                                        const TextConfig& config,
                                        const SystemMetricsOptions& options) {
  TopicSystemMetrics out;
  out.topic_id = topic.topic_id;
  out.rouge1 = RougeN(summary, topic.references, 1, config,
                      options.ref_aggregation);
  out.rouge2 = RougeN(summary, topic.references, 2, config,
                      options.ref_aggregation);
  if (oracle != nullptr) {
    Capture(out.notes, "f1_vs_oracle",
            [&] { out.f1_vs_oracle = F1VsOracle(summary, *oracle, config); });
  }
  for (int n : config.ngram_orders) {
    out.sys_abstractness[n] = std::nullopt;
    Capture(out.notes, "sys_abstractness_" + std::to_string(n), [&] {
      out.sys_abstractness[n] = SystemAbstractness(summary, topic, n, config);
    });
  }
  Capture(out.notes, "sys_redundancy",
          [&] { out.sys_redundancy = SystemRedundancy(summary, config); });
  Capture(out.notes, "idd", [&] {
    const IddResult idd = InterDocumentDistribution(summary, topic, config);
    out.idd = idd.idd;
    out.iddv = idd.iddv;
  });
  out.layout =
      SystemLayoutBias(summary, topic, options.segments, std::nullopt, config);
  out.layout_shuffled = SystemLayoutBias(summary, topic, options.segments,
                                         options.shuffle_seed, config);
  return out;
}

}  // namespace summgauge
