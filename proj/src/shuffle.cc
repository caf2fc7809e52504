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

#include "summgauge/shuffle.h"

#include <string>

namespace summgauge {

std::uint64_t Rng::Next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::Below(std::uint64_t bound) {
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = Next();
  while (x >= limit) x = Next();
  return x % bound;
}

double Rng::Uniform() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

std::uint64_t TopicSeed(std::uint64_t seed, std::string_view topic_id) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;  // FNV-1a
  for (char c : topic_id) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001B3ULL;
  }
  Rng rng(seed ^ hash);
  return rng.Next();
}

Topic ShuffleDocumentSentences(const Topic& topic, std::uint64_t seed,
                               const TextConfig& config) {
  Rng rng(TopicSeed(seed, topic.topic_id));
  Topic out = topic;
  for (std::string& document : out.documents) {
    std::vector<std::string> parts;
    for (const Sentence& s : SegmentSentences(document, config)) {
      parts.emplace_back(s.Text(document));
    }
    Shuffle(parts, rng);
    std::string joined;
    for (const std::string& p : parts) {
      if (!joined.empty()) joined.push_back(' ');
      joined += p;
    }
    document = std::move(joined);
  }
  return out;
}

}  // namespace summgauge
