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

#ifndef SUMMGAUGE_ROUGE_H_
#define SUMMGAUGE_ROUGE_H_

#include <string>
#include <string_view>
#include <vector>

#include "summgauge/textproc.h"

namespace summgauge {

struct RougeScore {
  int n = 1;
  double recall = 0.0;
  double precision = 0.0;
  double f1 = 0.0;
};

// f1 = 2pr / (p + r), or 0 when p + r = 0.
RougeScore MakeRougeScore(int n, double recall, double precision);

// How scores against several references combine. kMean averages recall and
// precision across references and derives f1 from the averages; kMax keeps
// the single reference with the highest f1 (first one on ties).
enum class RefAggregation { kMean, kMax };

// Sum over grams of min(candidate count, reference count).
int ClippedMatches(const NgramCounts& candidate, const NgramCounts& reference);

// Texts shorter than n terms contribute zero scores rather than errors.
RougeScore RougeN(std::string_view candidate,
                  const std::vector<std::string>& references, int n,
                  const TextConfig& config,
                  RefAggregation aggregation = RefAggregation::kMean);

RougeScore RougeFromCounts(const NgramCounts& candidate,
                           const std::vector<NgramCounts>& references, int n,
                           RefAggregation aggregation = RefAggregation::kMean);

}  // namespace summgauge

#endif  // SUMMGAUGE_ROUGE_H_
