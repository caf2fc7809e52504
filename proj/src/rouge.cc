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

#include "summgauge/rouge.h"

#include <algorithm>

namespace summgauge {

RougeScore MakeRougeScore(int n, double recall, double precision) {
  RougeScore score;
  score.n = n;
  score.recall = recall;
  score.precision = precision;
  const double sum = recall + precision;
  score.f1 = sum > 0.0 ? 2.0 * recall * precision / sum : 0.0;
  return score;
}

int ClippedMatches(const NgramCounts& candidate, const NgramCounts& reference) {
  const NgramCounts& small =
      candidate.size() <= reference.size() ? candidate : reference;
  const NgramCounts& large =
      candidate.size() <= reference.size() ? reference : candidate;
  int matches = 0;
  for (const auto& [gram, count] : small) {
    auto it = large.find(gram);
    if (it != large.end()) matches += std::min(count, it->second);
  }
  return matches;
}

RougeScore RougeN(std::string_view candidate,
                  const std::vector<std::string>& references, int n,
                  const TextConfig& config, RefAggregation aggregation) {
  const NgramCounts candidate_counts =
      CountNgrams(NgramTerms(candidate, config), n);
  std::vector<NgramCounts> reference_counts;
  reference_counts.reserve(references.size());
  for (const std::string& reference : references) {
    reference_counts.push_back(CountNgrams(NgramTerms(reference, config), n));
  }
  return RougeFromCounts(candidate_counts, reference_counts, n, aggregation);
}

RougeScore RougeFromCounts(const NgramCounts& candidate,
                           const std::vector<NgramCounts>& references, int n,
                           RefAggregation aggregation) {
  if (references.empty()) return MakeRougeScore(n, 0.0, 0.0);
  const int candidate_total = TotalCount(candidate);
  double recall_sum = 0.0;
  double precision_sum = 0.0;
  RougeScore best = MakeRougeScore(n, 0.0, 0.0);
  bool have_best = false;
  for (const NgramCounts& reference : references) {
    const int reference_total = TotalCount(reference);
    const int matches = ClippedMatches(candidate, reference);
    const double recall =
        reference_total > 0 ? static_cast<double>(matches) / reference_total
                            : 0.0;
    const double precision =
        candidate_total > 0 ? static_cast<double>(matches) / candidate_total
                            : 0.0;
    recall_sum += recall;
    precision_sum += precision;
    const RougeScore score = MakeRougeScore(n, recall, precision);
    if (!have_best || score.f1 > best.f1) {
      best = score;
      have_best = true;
    }
  }
  if (aggregation == RefAggregation::kMax) return best;
  const double count = static_cast<double>(references.size());
  return MakeRougeScore(n, recall_sum / count, precision_sum / count);
}

}  // namespace summgauge
