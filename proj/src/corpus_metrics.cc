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

#include "summgauge/corpus_metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "summgauge/error.h"
#include "summgauge/sentences.h"

namespace summgauge {
namespace {

double Mean(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double PopulationVariance(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  const double mean = Mean(values);
  double sum = 0.0;
  for (double v : values) sum += (v - mean) * (v - mean);
  return sum / static_cast<double>(values.size());
}

void RequireMultipleDocuments(const Topic& topic) {
  if (topic.documents.size() < 2) {
    throw Error(ErrorKind::kSingleDocument,
                "topic '" + topic.topic_id + "' has a single document");
  }
}

// Reference-matched pyramid SCUs plus the count of reference clauses that
// matched nothing.
struct ReferenceMatch {
  std::set<std::size_t> matched;
  std::size_t unmatched = 0;
};

ReferenceMatch MatchReference(const std::string& reference,
                              const Pyramid& pyramid, const TextConfig& config,
                              double jaccard_threshold) {
  ReferenceMatch match;
  for (const Clause& clause : ExtractClauses(reference, config)) {
    if (auto best = pyramid.BestMatch(clause.units, jaccard_threshold)) {
      match.matched.insert(*best);
    } else {
      ++match.unmatched;
    }
  }
  return match;
}

template <typename Fn>
void Capture(std::vector<std::string>& notes, const char* metric, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    notes.push_back(std::string(metric) + ": " +
                    std::string(ErrorKindName(e.kind())));
  }
}

}  // namespace

void CorpusMetricsOptions::Validate() const {
  if (segments < 2) {
    throw Error(ErrorKind::kInvalidConfig, "segments must be >= 2");
  }
  if (!(jaccard_threshold > 0.0 && jaccard_threshold <= 1.0)) {
    throw Error(ErrorKind::kInvalidConfig,
                "jaccard_threshold must lie in (0, 1]");
  }
}

double Abstractness(const Topic& topic, int n, const TextConfig& config) {
  std::set<std::string> source;
  for (const std::string& document : topic.documents) {
    std::set<std::string> grams = NgramSet(NgramTerms(document, config), n);
    source.insert(grams.begin(), grams.end());
  }
  std::vector<double> per_reference;
  for (const std::string& reference : topic.references) {
    const std::vector<std::string> terms = NgramTerms(reference, config);
    if (terms.size() < static_cast<std::size_t>(n)) {
      throw Error(ErrorKind::kDegenerateReference,
                  "reference shorter than " + std::to_string(n) + " terms");
    }
    const std::set<std::string> grams = NgramSet(terms, n);
    std::size_t novel = 0;
    for (const std::string& g : grams) novel += source.count(g) == 0;
    per_reference.push_back(100.0 * static_cast<double>(novel) /
                            static_cast<double>(grams.size()));
  }
  return Mean(per_reference);
}

double Relevance(const UnitDistribution& a, const UnitDistribution& b,
                 LogBase base) {
  if (!a.SameVocabulary(b)) {
    throw Error(ErrorKind::kVocabularyMismatch,
                "distributions are defined over different vocabularies");
  }
  double sum = 0.0;
  auto it = b.probabilities().begin();
  for (const auto& [unit, pa] : a.probabilities()) {
    const double pb = (it++)->second;
    if (pa == 0.0) continue;
    if (pb == 0.0) return -std::numeric_limits<double>::infinity();
    sum += pa * LogIn(base, pb);
  }
  return sum;
}

IdsResult InterDocumentSimilarity(const Topic& topic,
                                  const TextConfig& config) {
  RequireMultipleDocuments(topic);
  const std::size_t count = topic.documents.size();
  std::vector<UnitCounts> counts;
  counts.reserve(count);
  for (const std::string& document : topic.documents) {
    counts.push_back(CountUnits({document}, config));
  }
  IdsResult result;
  result.pairwise.assign(count, std::vector<std::optional<double>>(count));
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t i = 0; i < count; ++i) {
      if (i == j) continue;
      const std::set<std::string> vocabulary =
          UnionVocabulary(counts[j], counts[i]);
      const UnitDistribution pj =
          BuildDistribution(counts[j], vocabulary, config.smoothing_alpha);
      const UnitDistribution pi =
          BuildDistribution(counts[i], vocabulary, config.smoothing_alpha);
      result.pairwise[j][i] = Relevance(pj, pi, config.log_base);
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
      if (j != i) sum += *result.pairwise[j][i];
    }
    result.per_document.push_back(sum / static_cast<double>(count - 1));
  }
  result.ids = Mean(result.per_document);
  return result;
}

double TextRedundancy(const std::vector<std::string>& texts,
                      const TextConfig& config) {
  const UnitDistribution p = BuildDistribution(texts, config);
  double sum = 0.0;
  for (const auto& [unit, prob] : p.probabilities()) {
    if (prob > 0.0) sum += prob * LogIn(config.log_base, prob);
  }
  return sum;
}

double Redundancy(const Topic& topic, const TextConfig& config,
                  bool per_document) {
  if (!per_document) return TextRedundancy(topic.documents, config);
  std::vector<double> values;
  for (const std::string& document : topic.documents) {
    values.push_back(TextRedundancy({document}, config));
  }
  return Mean(values);
}

double PyramidScore(const std::string& reference, const Pyramid& pyramid,
                    const TextConfig& config, double jaccard_threshold) {
  const ReferenceMatch match =
      MatchReference(reference, pyramid, config, jaccard_threshold);
  const std::size_t m = match.matched.size() + match.unmatched;
  if (m == 0 || match.matched.empty()) return 0.0;
  double observed = 0.0;
  for (std::size_t i : match.matched) observed += pyramid.scus[i].weight;
  double optimal = 0.0;
  for (std::size_t i = 0; i < std::min(m, pyramid.scus.size()); ++i) {
    optimal += pyramid.scus[i].weight;
  }
  if (optimal <= 0.0) return 0.0;
  return std::clamp(observed / optimal, 0.0, 1.0);
}

double PyramidScore(const Topic& topic, const Pyramid& pyramid,
                    const TextConfig& config, double jaccard_threshold) {
  std::vector<double> values;
  for (const std::string& reference : topic.references) {
    values.push_back(
        PyramidScore(reference, pyramid, config, jaccard_threshold));
  }
  return Mean(values);
}

double InversePyramid(const Topic& topic, const Pyramid& pyramid,
                      const TextConfig& config, double jaccard_threshold,
                      bool normalized) {
  RequireMultipleDocuments(topic);
  std::vector<double> per_reference;
  for (const std::string& reference : topic.references) {
    const ReferenceMatch match =
        MatchReference(reference, pyramid, config, jaccard_threshold);
    std::vector<double> coverage(topic.documents.size(), 0.0);
    for (std::size_t i : match.matched) {
      for (std::size_t doc : pyramid.scus[i].documents) coverage[doc] += 1.0;
    }
    if (normalized && !match.matched.empty()) {
      for (double& c : coverage) c /= static_cast<double>(match.matched.size());
    }
    per_reference.push_back(PopulationVariance(coverage));
  }
  return Mean(per_reference);
}

std::vector<std::size_t> SegmentSizes(std::size_t count, int k) {
  if (k < 1) throw Error(ErrorKind::kInvalidConfig, "segments must be >= 1");
  const std::size_t segments = static_cast<std::size_t>(k);
  std::vector<std::size_t> sizes(segments, count / segments);
  for (std::size_t i = 0; i < count % segments; ++i) ++sizes[i];
  return sizes;
}

LayoutVector LayoutBias(const Topic& topic, int k, const TextConfig& config) {
  if (k < 2) throw Error(ErrorKind::kInvalidConfig, "segments must be >= 2");
  // One TF-IDF space over every document and reference sentence.
  std::vector<std::vector<std::string>> terms;
  std::vector<std::vector<std::size_t>> doc_rows;
  std::vector<std::vector<std::size_t>> ref_rows;
  for (const std::string& document : topic.documents) {
    doc_rows.emplace_back();
    for (const Sentence& s : SegmentSentences(document, config)) {
      doc_rows.back().push_back(terms.size());
      terms.push_back(UnitTerms(s.tokens, config));
    }
  }
  for (const std::string& reference : topic.references) {
    ref_rows.emplace_back();
    for (const Sentence& s : SegmentSentences(reference, config)) {
      ref_rows.back().push_back(terms.size());
      terms.push_back(UnitTerms(s.tokens, config));
    }
  }
  const std::vector<SparseVector> vectors = TfidfVectors(terms);

  const std::size_t segments = static_cast<std::size_t>(k);
  std::vector<std::vector<double>> per_reference(segments);
  for (const auto& reference : ref_rows) {
    std::vector<double> sum(segments, 0.0);
    std::vector<std::size_t> docs_with_segment(segments, 0);
    for (const auto& rows : doc_rows) {
      const std::vector<std::size_t> sizes = SegmentSizes(rows.size(), k);
      std::size_t pos = 0;
      for (std::size_t seg = 0; seg < segments; ++seg) {
        if (sizes[seg] == 0) continue;
        double importance = 0.0;
        for (std::size_t r = pos; r < pos + sizes[seg]; ++r) {
          double best = 0.0;
          for (std::size_t ref_row : reference) {
            best = std::max(best, Cosine(vectors[rows[r]], vectors[ref_row]));
          }
          importance += best;
        }
        pos += sizes[seg];
        sum[seg] += importance / static_cast<double>(sizes[seg]);
        ++docs_with_segment[seg];
      }
    }
    for (std::size_t seg = 0; seg < segments; ++seg) {
      if (docs_with_segment[seg] > 0) {
        per_reference[seg].push_back(sum[seg] /
                                     static_cast<double>(docs_with_segment[seg]));
      }
    }
  }
  LayoutVector layout(segments);
  for (std::size_t seg = 0; seg < segments; ++seg) {
    if (!per_reference[seg].empty()) layout[seg] = Mean(per_reference[seg]);
  }
  return layout;
}

double CompressionFactor(const Topic& topic) {
  double document_words = 0.0;
  for (const std::string& document : topic.documents) {
    document_words += static_cast<double>(WordCount(document));
  }
  double reference_words = 0.0;
  for (const std::string& reference : topic.references) {
    reference_words += static_cast<double>(WordCount(reference));
  }
  reference_words /= static_cast<double>(topic.references.size());
  if (reference_words <= 0.0) {
    throw Error(ErrorKind::kDegenerateReference, "reference has no words");
  }
  return document_words / reference_words;
}

TopicCorpusMetrics ComputeCorpusMetrics(const Topic& topic,
                                        const TextConfig& config,
                                        const CorpusMetricsOptions& options) {
  TopicCorpusMetrics out;
  out.topic_id = topic.topic_id;
  auto& notes = out.notes;
  for (int n : config.ngram_orders) {
    out.abstractness[n] = std::nullopt;
    Capture(notes, ("abstractness_" + std::to_string(n)).c_str(),
            [&] { out.abstractness[n] = Abstractness(topic, n, config); });
  }
  Capture(notes, "ids", [&] {
    IdsResult ids = InterDocumentSimilarity(topic, config);
    out.ids = ids.ids;
    if (options.pairwise_relevance) {
      out.pairwise_relevance = std::move(ids.pairwise);
    }
  });
  Capture(notes, "redundancy", [&] {
    out.redundancy =
        Redundancy(topic, config, options.per_document_redundancy);
  });
  std::optional<Pyramid> pyramid;
  Capture(notes, "pyramid", [&] {
    pyramid = ExtractScus(topic.documents, config, options.jaccard_threshold);
    out.pyramid =
        PyramidScore(topic, *pyramid, config, options.jaccard_threshold);
  });
  if (pyramid) {
    Capture(notes, "inv_pyramid", [&] {
      out.inv_pyramid =
          InversePyramid(topic, *pyramid, config, options.jaccard_threshold,
                         options.normalized_inverse_pyramid);
    });
  } else {
    notes.push_back("inv_pyramid: NoSCUs");
  }
  out.layout = LayoutBias(topic, options.segments, config);
  Capture(notes, "compression",
          [&] { out.compression = CompressionFactor(topic); });
  return out;
}

}  // namespace summgauge
