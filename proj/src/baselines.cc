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

#include "summgauge/baselines.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "summgauge/error.h"
#include "summgauge/porter_stemmer.h"

namespace summgauge {
namespace {

constexpr double kTieTolerance = 1e-12;

struct Prepared {
  std::vector<SourceSentence> sentences;
  std::vector<std::vector<std::string>> terms;  // semantic units
  int budget = 1;
};

Prepared Prepare(const Topic& topic, const SummarizerConfig& cfg,
                 const TextConfig& config) {
  Prepared p;
  p.sentences = CollectSentences(topic, config);
  if (p.sentences.empty()) {
    throw Error(ErrorKind::kNoSentences,
                "topic '" + topic.topic_id + "' has no sentences");
  }
  for (const SourceSentence& s : p.sentences) {
    p.terms.push_back(UnitTerms(s.tokens, config));
  }
  p.budget = cfg.budget_words > 0 ? cfg.budget_words : DefaultBudgetWords(topic);
  return p;
}

Summary Assemble(const Prepared& p, const std::vector<std::size_t>& chosen) {
  Summary summary;
  for (std::size_t i : chosen) summary.selected.push_back(p.sentences[i].ref);
  std::vector<std::size_t> ordered = chosen;
  std::sort(ordered.begin(), ordered.end());
  std::vector<const SourceSentence*> picked;
  for (std::size_t i : ordered) picked.push_back(&p.sentences[i]);
  summary.text = JoinTexts(picked);
  return summary;
}

// Walks sentences by descending score (ties by index), adding those that fit.
std::vector<std::size_t> SelectByScore(const Prepared& p,
                                       const std::vector<double>& scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Power iteration leaves rounding noise between symmetric nodes.
  auto key = [&](std::size_t i) { return std::llround(scores[i] * 1e10); };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key(a) > key(b); });
  std::vector<std::size_t> chosen;
  std::size_t used = 0;
  for (std::size_t i : order) {
    const std::size_t words = p.sentences[i].words();
    if (!FitsBudget(used, words, chosen.empty(), p.budget)) continue;
    chosen.push_back(i);
    used += words;
    if (used > static_cast<std::size_t>(p.budget)) break;
  }
  return chosen;
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kLexRank: return "lexrank";
    case Algorithm::kTextRank: return "textrank";
    case Algorithm::kMmr: return "mmr";
    case Algorithm::kGreedyConcept: return "greedy_concept";
  }
  return "unknown";
}

std::vector<std::string> SupportedAlgorithms() {
  return {"lexrank", "textrank", "mmr", "greedy_concept"};
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kLexRank, Algorithm::kTextRank,
                      Algorithm::kMmr, Algorithm::kGreedyConcept}) {
    if (AlgorithmName(a) == name) return a;
  }
  std::string supported;
  for (const std::string& s : SupportedAlgorithms()) {
    supported += supported.empty() ? s : ", " + s;
  }
  throw Error(ErrorKind::kUnknownAlgorithm, "unknown algorithm '" +
                                                std::string(name) +
                                                "'; supported: " + supported);
}

void SummarizerConfig::Validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::kInvalidConfig, what);
  };
  if (!(damping >= 0.0 && damping <= 1.0)) fail("damping must lie in [0, 1]");
  if (!(cosine_threshold >= 0.0 && cosine_threshold <= 1.0)) {
    fail("cosine_threshold must lie in [0, 1]");
  }
  if (!(mmr_lambda >= 0.0 && mmr_lambda <= 1.0)) {
    fail("mmr_lambda must lie in [0, 1]");
  }
  if (max_iterations < 1) fail("max_iterations must be >= 1");
  if (!(epsilon > 0.0)) fail("epsilon must be > 0");
}

std::vector<double> PowerIteration(
    const std::vector<std::vector<double>>& weights, double damping,
    int max_iterations, double epsilon) {
  const std::size_t n = weights.size();
  if (n == 0) return {};
  const double uniform = 1.0 / static_cast<double>(n);
  std::vector<double> row_sum(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    row_sum[i] = std::accumulate(weights[i].begin(), weights[i].end(), 0.0);
  }
  std::vector<double> p(n, uniform);
  std::vector<double> next(n);
  for (int iter = 0; iter < max_iterations; ++iter) {
    double dangling = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (row_sum[i] <= 0.0) dangling += p[i];
    }
    std::fill(next.begin(), next.end(),
              (1.0 - damping) * uniform + damping * dangling * uniform);
    for (std::size_t i = 0; i < n; ++i) {
      if (row_sum[i] <= 0.0) continue;
      const double share = damping * p[i] / row_sum[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (weights[i][j] != 0.0) next[j] += share * weights[i][j];
      }
    }
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) change += std::abs(next[i] - p[i]);
    p.swap(next);
    if (change < epsilon) break;
  }
  return p;
}

std::vector<std::vector<double>> LexRankGraph(
    const std::vector<std::vector<std::string>>& sentence_terms,
    double cosine_threshold) {
  const std::vector<SparseVector> vectors = TfidfVectors(sentence_terms);
  const std::size_t n = vectors.size();
  std::vector<std::vector<double>> graph(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (Cosine(vectors[i], vectors[j]) >= cosine_threshold) {
        graph[i][j] = graph[j][i] = 1.0;
      }
    }
  }
  return graph;
}

double TextRankSimilarity(const std::vector<std::string>& a,
                          const std::vector<std::string>& b) {
  if (a.empty() || b.empty()) return 0.0;
  const double denominator = std::log(static_cast<double>(a.size())) +
                             std::log(static_cast<double>(b.size()));
  if (denominator <= 0.0) return 0.0;
  const std::set<std::string> sa(a.begin(), a.end());
  std::set<std::string> shared;
  for (const std::string& t : b) {
    if (sa.count(t) > 0) shared.insert(t);
  }
  return static_cast<double>(shared.size()) / denominator;
}

Summary LexRank(const Topic& topic, const SummarizerConfig& cfg,
                const TextConfig& config) {
  const Prepared p = Prepare(topic, cfg, config);
  const std::vector<double> scores =
      PowerIteration(LexRankGraph(p.terms, cfg.cosine_threshold), cfg.damping,
                     cfg.max_iterations, cfg.epsilon);
  return Assemble(p, SelectByScore(p, scores));
}

Summary TextRank(const Topic& topic, const SummarizerConfig& cfg,
                 const TextConfig& config) {
  const Prepared p = Prepare(topic, cfg, config);
  const std::size_t n = p.terms.size();
  std::vector<std::vector<double>> graph(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      graph[i][j] = graph[j][i] = TextRankSimilarity(p.terms[i], p.terms[j]);
    }
  }
  const std::vector<double> scores = PowerIteration(
      graph, cfg.damping, cfg.max_iterations, cfg.epsilon);
  return Assemble(p, SelectByScore(p, scores));
}

Summary Mmr(const Topic& topic, const SummarizerConfig& cfg,
            const TextConfig& config) {
  const Prepared p = Prepare(topic, cfg, config);
  const std::vector<SparseVector> vectors = TfidfVectors(p.terms);
  const std::size_t n = vectors.size();

  std::map<std::uint32_t, double> centroid;
  for (const SparseVector& v : vectors) {
    for (const auto& [id, w] : v.entries) centroid[id] += w / n;
  }
  SparseVector query;
  query.entries.assign(centroid.begin(), centroid.end());

  std::vector<double> relevance(n);
  for (std::size_t i = 0; i < n; ++i) relevance[i] = Cosine(vectors[i], query);

  std::vector<bool> used(n, false);
  std::vector<std::size_t> chosen;
  std::size_t words = 0;
  while (words <= static_cast<std::size_t>(p.budget)) {
    std::optional<std::size_t> best;
    double best_score = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i] ||
          !FitsBudget(words, p.sentences[i].words(), chosen.empty(), p.budget)) {
        continue;
      }
      double redundancy = 0.0;
      for (std::size_t j : chosen) {
        redundancy = std::max(redundancy, Cosine(vectors[i], vectors[j]));
      }
      const double score = cfg.mmr_lambda * relevance[i] -
                           (1.0 - cfg.mmr_lambda) * redundancy;
      if (!best || score > best_score + kTieTolerance) {
        best = i;
        best_score = score;
      }
    }
    if (!best) break;
    used[*best] = true;
    chosen.push_back(*best);
    words += p.sentences[*best].words();
  }
  return Assemble(p, chosen);
}

Summary GreedyConcept(const Topic& topic, const SummarizerConfig& cfg,
                      const TextConfig& config) {
  const Prepared p = Prepare(topic, cfg, config);
  const Lexicon& lexicon = Lexicon::Default();
  // Concepts are stemmed bigrams that are not made of two stopwords.
  std::vector<std::set<std::string>> sentence_concepts;
  std::map<std::string, std::set<std::size_t>> concept_docs;
  for (const SourceSentence& s : p.sentences) {
    std::set<std::string> concepts;
    for (std::size_t i = 0; i + 1 < s.tokens.size(); ++i) {
      const std::string& a = s.tokens[i];
      const std::string& b = s.tokens[i + 1];
      if (lexicon.IsStopword(a) && lexicon.IsStopword(b)) continue;
      std::string bigram = PorterStem(a) + " " + PorterStem(b);
      concept_docs[bigram].insert(s.ref.doc);
      concepts.insert(std::move(bigram));
    }
    sentence_concepts.push_back(std::move(concepts));
  }

  Summary summary;
  int min_weight = 2;
  const bool any_shared = std::any_of(
      concept_docs.begin(), concept_docs.end(),
      [](const auto& entry) { return entry.second.size() >= 2; });
  if (!any_shared) {
    min_weight = 1;
    summary.warnings.push_back("topic '" + topic.topic_id +
                               "': NoConcepts, no bigram appears in two "
                               "documents; using all bigrams");
  }
  std::map<std::string, int> weights;
  for (const auto& [bigram, docs] : concept_docs) {
    if (static_cast<int>(docs.size()) >= min_weight) {
      weights[bigram] = static_cast<int>(docs.size());
    }
  }

  std::set<std::string> covered;
  std::vector<bool> used(p.sentences.size(), false);
  std::vector<std::size_t> chosen;
  std::size_t words = 0;
  while (true) {
    std::optional<std::size_t> best;
    double best_ratio = 0.0;
    for (std::size_t i = 0; i < p.sentences.size(); ++i) {
      const std::size_t w = p.sentences[i].words();
      if (used[i] || !FitsBudget(words, w, chosen.empty(), p.budget)) continue;
      int gain = 0;
      for (const std::string& c : sentence_concepts[i]) {
        auto it = weights.find(c);
        if (it != weights.end() && covered.count(c) == 0) gain += it->second;
      }
      if (gain <= 0) continue;
      const double ratio = static_cast<double>(gain) / static_cast<double>(w);
      if (!best || ratio > best_ratio + kTieTolerance) {
        best = i;
        best_ratio = ratio;
      }
    }
    if (!best) break;
    used[*best] = true;
    chosen.push_back(*best);
    words += p.sentences[*best].words();
    for (const std::string& c : sentence_concepts[*best]) {
      if (weights.count(c) > 0) covered.insert(c);
    }
    if (words > static_cast<std::size_t>(p.budget)) break;
  }
  if (chosen.empty()) {
    summary.warnings.push_back("topic '" + topic.topic_id +
                               "': no concept coverage; using the lead sentence");
    chosen.push_back(0);
  }
  Summary assembled = Assemble(p, chosen);
  assembled.warnings = std::move(summary.warnings);
  return assembled;
}

Summary Summarize(const Topic& topic, const SummarizerConfig& cfg,
                  const TextConfig& config) {
  switch (cfg.algorithm) {
    case Algorithm::kLexRank: return LexRank(topic, cfg, config);
    case Algorithm::kTextRank: return TextRank(topic, cfg, config);
    case Algorithm::kMmr: return Mmr(topic, cfg, config);
    case Algorithm::kGreedyConcept: return GreedyConcept(topic, cfg, config);
  }
  throw Error(ErrorKind::kUnknownAlgorithm, "unknown algorithm");
}

}  // namespace summgauge
