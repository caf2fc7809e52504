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

#include "summgauge/sentences.h"

#include <algorithm>
#include <cmath>

namespace summgauge {

std::vector<SourceSentence> CollectSentences(const Topic& topic,
                                             const TextConfig& config) {
  std::vector<SourceSentence> out;
  for (std::size_t d = 0; d < topic.documents.size(); ++d) {
    const std::string& document = topic.documents[d];
    for (Sentence& s : SegmentSentences(document, config)) {
      SourceSentence source;
      source.ref = {d, s.index};
      source.text = std::string(s.Text(document));
      source.tokens = std::move(s.tokens);
      out.push_back(std::move(source));
    }
  }
  return out;
}

std::size_t WordCount(std::string_view text) {
  return Tokenize(text, false).size();
}

int DefaultBudgetWords(const Topic& topic) {
  if (topic.references.empty()) return 1;
  double total = 0.0;
  for (const std::string& reference : topic.references) {
    total += static_cast<double>(WordCount(reference));
  }
  const double mean = total / static_cast<double>(topic.references.size());
  return std::max(1, static_cast<int>(std::floor(mean + 0.5)));
}

std::string JoinTexts(const std::vector<const SourceSentence*>& sentences) {
  std::string out;
  for (const SourceSentence* s : sentences) {
    if (!out.empty()) out.push_back(' ');
    out += s->text;
  }
  return out;
}

}  // namespace summgauge
