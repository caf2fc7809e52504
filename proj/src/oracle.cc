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

#include "summgauge/oracle.h"

#include <algorithm>
#include <cmath>
#include <optional>

#include "summgauge/error.h"

namespace summgauge {
namespace {

constexpr double kTieTolerance = 1e-12;

// Mean-over-references clipped recall of a growing sentence selection.
class RecallTracker {
 public:
  explicit RecallTracker(std::vector<NgramCounts> references)
      : references_(std::move(references)),
        matched_(references_.size(), 0) {
    for (const NgramCounts& r : references_) totals_.push_back(TotalCount(r));
  }

  double Recall() const { return Combine(matched_); }

  double Gain(const NgramCounts& sentence) const {
    std::vector<int> delta(references_.size(), 0);
    for (const auto& [gram, count] : sentence) {
      auto sel = selected_.find(gram);
      const int have = sel == selected_.end() ? 0 : sel->second;
      for (std::size_t r = 0; r < references_.size(); ++r) {
        auto it = references_[r].find(gram);
        if (it == references_[r].end()) continue;
        delta[r] += std::min(have + count, it->second) -
                    std::min(have, it->second);
      }
    }
    return Combine(delta);
  }

  void Add(const NgramCounts& sentence) { Update(sentence, +1); }
  void Remove(const NgramCounts& sentence) { Update(sentence, -1); }

  const NgramCounts& selected() const { return selected_; }

 private:
  double Combine(const std::vector<int>& matches) const {
    if (references_.empty()) return 0.0;
    double sum = 0.0;
    for (std::size_t r = 0; r < references_.size(); ++r) {
      if (totals_[r] > 0) sum += static_cast<double>(matches[r]) / totals_[r];
    }
    return sum / static_cast<double>(references_.size());
  }

  void Update(const NgramCounts& sentence, int sign) {
    for (const auto& [gram, count] : sentence) {
      int& have = selected_[gram];
      const int after = have + sign * count;
      for (std::size_t r = 0; r < references_.size(); ++r) {
        auto it = references_[r].find(gram);
        if (it == references_[r].end()) continue;
        matched_[r] += std::min(after, it->second) - std::min(have, it->second);
      }
      have = after;
      if (have == 0) selected_.erase(gram);
    }
  }

  std::vector<NgramCounts> references_;
  std::vector<int> totals_;
  std::vector<int> matched_;
  NgramCounts selected_;
};

struct Instance {
  std::vector<SourceSentence> sentences;
  std::vector<NgramCounts> sentence_counts;
  std::vector<NgramCounts> reference_counts;
  int budget = 1;
};

Instance Prepare(const Topic& topic, const OracleOptions& options,
                 const TextConfig& config) {
  if (options.n < 1) {
    throw Error(ErrorKind::kInvalidConfig, "ROUGE order must be >= 1");
  }
  Instance instance;
  instance.sentences = CollectSentences(topic, config);
  if (instance.sentences.empty()) {
    throw Error(ErrorKind::kNoSentences,
                "topic '" + topic.topic_id + "' has no sentences");
  }
  for (const SourceSentence& s : instance.sentences) {
    instance.sentence_counts.push_back(
        CountNgrams(NgramTerms(s.tokens, config), options.n));
  }
  for (const std::string& reference : topic.references) {
    instance.reference_counts.push_back(
        CountNgrams(NgramTerms(reference, config), options.n));
  }
  instance.budget = options.budget_words > 0 ? options.budget_words
                                             : DefaultBudgetWords(topic);
  return instance;
}

OracleResult Finish(const Instance& instance, std::vector<std::size_t> chosen,
                    int n, OracleMethod method) {
  OracleResult result;
  result.method = method;
  result.budget = instance.budget;
  NgramCounts counts;
  std::vector<const SourceSentence*> picked;
  for (std::size_t i : chosen) {
    const SourceSentence& s = instance.sentences[i];
    result.selected.push_back(s.ref);
    result.budget_used += static_cast<int>(s.words());
    for (const auto& [gram, c] : instance.sentence_counts[i]) counts[gram] += c;
    picked.push_back(&s);
  }
  result.score = RougeFromCounts(counts, instance.reference_counts, n);
  result.text = JoinTexts(picked);
  return result;
}

}  // namespace

std::string_view OracleMethodName(OracleMethod method) {
  return method == OracleMethod::kExact ? "exact" : "greedy";
}

OracleResult GreedyOracle(const Topic& topic, const OracleOptions& options,
                          const TextConfig& config) {
  const Instance instance = Prepare(topic, options, config);
  RecallTracker tracker(instance.reference_counts);
  std::vector<bool> used(instance.sentences.size(), false);
  std::vector<std::size_t> chosen;
  std::size_t words = 0;
  while (true) {
    std::optional<std::size_t> best;
    double best_gain = 0.0;
    for (std::size_t i = 0; i < instance.sentences.size(); ++i) {
      if (used[i]) continue;
      if (!FitsBudget(words, instance.sentences[i].words(), chosen.empty(),
                      instance.budget)) {
        continue;
      }
      const double gain = tracker.Gain(instance.sentence_counts[i]);
      if (!best || gain > best_gain + kTieTolerance) {
        best = i;
        best_gain = gain;
      }
    }
    if (!best) break;
    if (best_gain <= kTieTolerance && !options.fill_budget) break;
    used[*best] = true;
    chosen.push_back(*best);
    words += instance.sentences[*best].words();
    tracker.Add(instance.sentence_counts[*best]);
    if (words > static_cast<std::size_t>(instance.budget)) break;
  }
  return Finish(instance, std::move(chosen), options.n, OracleMethod::kGreedy);
}

OracleResult ExactOracle(const Topic& topic, const OracleOptions& options,
                         const TextConfig& config) {
  const Instance instance = Prepare(topic, options, config);
  const std::size_t count = instance.sentences.size();
  if (options.max_sentences < 0 ||
      count > static_cast<std::size_t>(options.max_sentences)) {
    throw Error(ErrorKind::kTooLarge,
                std::to_string(count) + " sentences exceed the limit of " +
                    std::to_string(options.max_sentences));
  }
  RecallTracker tracker(instance.reference_counts);
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;
  double best_recall = 0.0;
  std::size_t words = 0;
  // Depth-first enumeration visits index sets in lexicographic order, so a
  // strict improvement test keeps the smallest set among equal recalls.
  auto visit = [&](auto&& self, std::size_t start) -> void {
    const double recall = tracker.Recall();
    if (recall > best_recall + kTieTolerance) {
      best_recall = recall;
      best = current;
    }
    for (std::size_t j = start; j < count; ++j) {
      const std::size_t w = instance.sentences[j].words();
      if (!FitsBudget(words, w, current.empty(), instance.budget)) continue;
      current.push_back(j);
      words += w;
      tracker.Add(instance.sentence_counts[j]);
      self(self, j + 1);
      tracker.Remove(instance.sentence_counts[j]);
      words -= w;
      current.pop_back();
    }
  };
  visit(visit, 0);
  return Finish(instance, std::move(best), options.n, OracleMethod::kExact);
}

}  // namespace summgauge
