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

#include "summgauge/porter_stemmer.h"

#include <fstream>

#include <gtest/gtest.h>

#include "summgauge/textproc.h"
#include "test_util.h"

namespace summgauge {
namespace {

// Reference stems were produced by NLTK's PorterStemmer in
// ORIGINAL_ALGORITHM mode.
TEST(PorterStemmerTest, MatchesReferenceList) {
  std::ifstream in(testing::SourcePath("tests/data/porter_nltk.tsv"));
  ASSERT_TRUE(in);
  std::string line;
  int checked = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    ASSERT_NE(tab, std::string::npos);
    const std::string word = line.substr(0, tab);
    EXPECT_EQ(PorterStem(word), line.substr(tab + 1)) << word;
    ++checked;
  }
  EXPECT_GT(checked, 300);
}

TEST(PorterStemmerTest, ClassicExamples) {
  EXPECT_EQ(PorterStem("caresses"), "caress");
  EXPECT_EQ(PorterStem("ponies"), "poni");
  EXPECT_EQ(PorterStem("relational"), "relat");
  EXPECT_EQ(PorterStem("generalizations"), "gener");
  EXPECT_EQ(PorterStem("president"), "presid");
}

TEST(PorterStemmerTest, LeavesShortAndNonAlphabeticWords) {
  EXPECT_EQ(PorterStem("is"), "is");
  EXPECT_EQ(PorterStem("2024s"), "2024s");
  EXPECT_EQ(PorterStem("don't"), "don't");
  EXPECT_EQ(PorterStem(""), "");
}

TEST(PorterStemmerTest, OutputIsNeverLonger) {
  const Corpus corpus =
      LoadCorpus(testing::SourcePath("data/toy_corpus.jsonl"));
  for (const Topic& topic : corpus.topics) {
    for (const std::string& doc : topic.documents) {
      for (const Token& t : Tokenize(doc)) {
        EXPECT_LE(PorterStem(t.text).size(), t.text.size()) << t.text;
      }
    }
  }
}

}  // namespace
}  // namespace summgauge
