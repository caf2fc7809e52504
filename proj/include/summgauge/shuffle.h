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

// Portable seeded shuffling. std::shuffle and the standard distributions
// are implementation-defined, so reports would differ across standard
// libraries; this generator and Fisher-Yates loop are fixed.

#ifndef SUMMGAUGE_SHUFFLE_H_
#define SUMMGAUGE_SHUFFLE_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "summgauge/ingest.h"
#include "summgauge/textproc.h"

namespace summgauge {

// SplitMix64 generator.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next();
  // Uniform in [0, bound); bound must be > 0.
  std::uint64_t Below(std::uint64_t bound);
  // Uniform in [0, 1).
  double Uniform();

 private:
  std::uint64_t state_;
};

template <typename T>
void Shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.Below(i));
    std::swap(items[i - 1], items[j]);
  }
}

// Per-topic seed, independent of topic order and worker scheduling.
std::uint64_t TopicSeed(std::uint64_t seed, std::string_view topic_id);

// Permutes the sentences inside every document; document order is kept.
Topic ShuffleDocumentSentences(const Topic& topic, std::uint64_t seed,
                               const TextConfig& config);

}  // namespace summgauge

#endif  // SUMMGAUGE_SHUFFLE_H_
