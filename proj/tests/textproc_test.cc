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

#include "summgauge/textproc.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>

#include <gtest/gtest.h>

#include "json.hpp"
#include "summgauge/error.h"
#include "summgauge/porter_stemmer.h"
#include "test_util.h"

namespace summgauge {
namespace {

std::vector<std::string> Texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) out.push_back(t.text);
  return out;
}

TEST(TokenizeTest, KeepsInternalApostrophesAndHyphens) {
  EXPECT_EQ(Texts(Tokenize("Don't stop the well-known show -- now!")),
            (std::vector<std::string>{"don't", "stop", "the", "well-known",
                                      "show", "now"}));
}

TEST(TokenizeTest, FoldsRightQuoteAndLowercasesLatin1) {
  EXPECT_EQ(Texts(Tokenize("It\xE2\x80\x99s \xC3\x89T\xC3\x89")),
            (std::vector<std::string>{"it's", "\xC3\xA9t\xC3\xA9"}));
}

TEST(TokenizeTest, OffsetsPointIntoSource) {
  const std::string text = "  Hello, world.";
  const auto tokens = Tokenize(text, false);
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(text.substr(tokens[0].begin, tokens[0].end - tokens[0].begin),
            "Hello");
  EXPECT_EQ(tokens[1].text, "world");
}

TEST(TokenizeTest, MalformedUtf8DoesNotCrash) {
  const auto tokens = Tokenize(std::string("ab\xC3") + " \xFF" + "cd");
  EXPECT_EQ(Texts(tokens), (std::vector<std::string>{"ab", "cd"}));
}

TEST(SegmentTest, HandCheckedFixture) {
  std::ifstream in(testing::SourcePath("tests/data/segmentation_cases.jsonl"));
  std::string line;
  int cases = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    const std::string text = j["text"];
    std::vector<std::string> got;
    for (const Sentence& s : SegmentSentences(text)) {
      got.emplace_back(s.Text(text));
    }
    EXPECT_EQ(got, j["sentences"].get<std::vector<std::string>>()) << text;
    ++cases;
  }
  EXPECT_EQ(cases, 20);
}

TEST(SegmentTest, SentencesAlwaysHaveTokensAndIncreasingIndex) {
  const std::string text = "... ! First one. ?? Second one! \"\" Third.";
  const auto sentences = SegmentSentences(text);
  ASSERT_FALSE(sentences.empty());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    EXPECT_FALSE(sentences[i].tokens.empty());
    EXPECT_EQ(sentences[i].index, i);
  }
}

TEST(TermsTest, UnitsDropStopwordsAndStem) {
  const TextConfig config;
  EXPECT_EQ(UnitTerms("The president signed the new bill", config),
            (std::vector<std::string>{"presid", "sign", "new", "bill"}));
  EXPECT_EQ(NgramTerms("The president signed", config),
            (std::vector<std::string>{"the", "president", "signed"}));
  TextConfig stemmed;
  stemmed.stem = true;
  EXPECT_EQ(NgramTerms("The president signed", stemmed),
            (std::vector<std::string>{"the", "presid", "sign"}));
}

TEST(TermsTest, CountNgramsJoinsWithSpace) {
  const NgramCounts c = CountNgrams({"a", "b", "a", "b"}, 2);
  EXPECT_EQ(c.at("a b"), 2);
  EXPECT_EQ(c.at("b a"), 1);
  EXPECT_EQ(TotalCount(c), 3);
  EXPECT_TRUE(CountNgrams({"a"}, 2).empty());
}

TEST(LexiconTest, EnvironmentOverridesStopwords) {
  const Lexicon custom = Lexicon::FromText("# header\nfoo\n  Bar  \n", "");
  EXPECT_TRUE(custom.IsStopword("foo"));
  EXPECT_TRUE(custom.IsStopword("bar"));
  EXPECT_FALSE(custom.IsStopword("the"));
  EXPECT_TRUE(Lexicon::Default().IsStopword("the"));
  EXPECT_EQ(Lexicon::Default().StopwordFingerprint().size(), 16u);
}

TEST(DistributionTest, UnsmoothedCounts) {
  TextConfig config;
  config.unit_stopwords = StopwordPolicy::kKeep;
  config.stem_units = false;
  const auto p = BuildDistribution(CountUnits({"a a b"}, config), {"a", "b"}, 0.0);
  EXPECT_NEAR(p.Probability("a"), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(p.Probability("b"), 1.0 / 3.0, 1e-12);
}

TEST(DistributionTest, SmoothedOverLargerVocabulary) {
  TextConfig config;
  config.unit_stopwords = StopwordPolicy::kKeep;
  config.stem_units = false;
  const auto p =
      BuildDistribution(CountUnits({"a a b"}, config), {"a", "b", "c"}, 0.01);
  const double z = 2.01 + 1.01 + 0.01;
  EXPECT_NEAR(p.Probability("a"), 2.01 / z, 1e-12);
  EXPECT_NEAR(p.Probability("b"), 1.01 / z, 1e-12);
  EXPECT_NEAR(p.Probability("c"), 0.01 / z, 1e-12);
  double sum = 0.0;
  for (const auto& [u, v] : p.probabilities()) sum += v;
  EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(DistributionTest, OnlyStopwordsIsEmptyAfterFiltering) {
  try {
    BuildDistribution({"the of and a"}, TextConfig{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEmptyAfterFiltering);
  }
}

TEST(DistributionTest, CountOutsideVocabularyIsMismatch) {
  try {
    BuildDistribution(UnitCounts{{"x", 1}}, {"y"}, 0.1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kVocabularyMismatch);
  }
}

TEST(ClauseTest, SplitsAtPunctuationAndConjunctions) {
  const auto clauses = ExtractClauses(
      "The president signed the bill, and the senate approved the budget "
      "today; ok.",
      TextConfig{});
  ASSERT_EQ(clauses.size(), 2u);
  EXPECT_EQ(clauses[0].units, (std::set<std::string>{"presid", "sign", "bill"}));
  EXPECT_EQ(clauses[1].units,
            (std::set<std::string>{"senat", "approv", "budget", "todai"}));
}

TEST(ScuTest, IdenticalClausesMergeAcrossDocuments) {
  const std::string doc = "The president signed the bill.";
  const Pyramid p = ExtractScus({doc, doc, doc}, TextConfig{});
  ASSERT_EQ(p.scus.size(), 1u);
  EXPECT_EQ(p.scus[0].weight, 3);
  ASSERT_EQ(p.tiers.size(), 1u);
  EXPECT_EQ(p.tiers[0].weight, 3);
}

TEST(ScuTest, DisjointDocumentsGiveSingleBottomTier) {
  const Pyramid p = ExtractScus(
      {"Engineers tested rockets near deserts.", "Farmers harvested wheat during autumn."},
      TextConfig{});
  ASSERT_EQ(p.scus.size(), 2u);
  for (const Scu& s : p.scus) EXPECT_EQ(s.weight, 1);
  ASSERT_EQ(p.tiers.size(), 1u);
  EXPECT_EQ(p.tiers[0].weight, 1);
}

TEST(ScuTest, JaccardThreeQuartersMerges) {
  EXPECT_DOUBLE_EQ(Jaccard({"presid", "sign", "new", "bill"},
                           {"presid", "sign", "bill"}),
                   0.75);
  const Pyramid p = ExtractScus(
      {"The president signed the new bill.", "The president signed the bill."},
      TextConfig{}, 0.6);
  ASSERT_EQ(p.scus.size(), 1u);
  EXPECT_EQ(p.scus[0].weight, 2);
  // Above 0.75 the two clauses stay apart.
  EXPECT_EQ(ExtractScus({"The president signed the new bill.",
                         "The president signed the bill."},
                        TextConfig{}, 0.8)
                .scus.size(),
            2u);
}

TEST(ScuTest, NoClausesThrowsNoScus) {
  try {
    ExtractScus({"Hi there.", "Ok."}, TextConfig{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNoScus);
  }
}

TEST(ScuTest, LoweringThresholdOnlyIncreasesTopWeight) {
  const std::vector<std::string> docs = {
      "The storm damaged homes near the coast. Crews restored power lines.",
      "The storm damaged many homes along the coast. Officials opened shelters.",
      "Crews restored power lines overnight. The storm hit coastal homes hard."};
  int previous = 0;
  for (double thr : {1.0, 0.8, 0.6, 0.4, 0.2}) {
    const Pyramid p = ExtractScus(docs, TextConfig{}, thr);
    EXPECT_GE(p.scus.front().weight, previous) << thr;
    previous = p.scus.front().weight;
    for (const Scu& s : p.scus) {
      EXPECT_GE(s.weight, 1);
      EXPECT_LE(s.weight, 3);
    }
  }
}

TEST(TfidfTest, IdenticalAndDisjoint) {
  const auto v = TfidfVectors({{"a", "b"}, {"a", "b"}, {"c"}});
  EXPECT_NEAR(Cosine(v[0], v[1]), 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(Cosine(v[0], v[2]), 0.0);
  EXPECT_DOUBLE_EQ(Cosine(SparseVector{}, v[0]), 0.0);
}

TEST(TfidfTest, MatchesBruteForce) {
  const std::vector<std::vector<std::string>> sentences = {
      {"cat", "sat", "mat", "cat"}, {"dog", "sat", "log"}, {"cat", "dog"}};
  const auto vectors = TfidfVectors(sentences);
  // Independent recomputation keyed by term string.
  std::map<std::string, int> df;
  for (const auto& s : sentences) {
    std::set<std::string> seen(s.begin(), s.end());
    for (const auto& t : seen) ++df[t];
  }
  std::vector<std::string> vocab;
  for (const auto& [t, c] : df) vocab.push_back(t);
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    std::map<std::string, int> tf;
    for (const auto& t : sentences[i]) ++tf[t];
    ASSERT_EQ(vectors[i].entries.size(), tf.size());
    for (const auto& [id, weight] : vectors[i].entries) {
      const std::string& term = vocab.at(id);
      const double expected =
          tf.at(term) * (std::log((3.0 + 1.0) / (df[term] + 1.0)) + 1.0);
      EXPECT_NEAR(weight, expected, 1e-12) << term;
    }
  }
}

TEST(ConfigTest, RejectsBadOrdersAndAlpha) {
  TextConfig c;
  c.ngram_orders = {0};
  EXPECT_THROW(c.Validate(), Error);
  c.ngram_orders = {1};
  c.smoothing_alpha = -1;
  EXPECT_THROW(c.Validate(), Error);
}

TEST(LogTest, Bases) {
  EXPECT_NEAR(LogIn(LogBase::kTwo, 8.0), 3.0, 1e-12);
  EXPECT_NEAR(LogIn(LogBase::kNatural, std::exp(2.0)), 2.0, 1e-12);
}

}  // namespace
}  // namespace summgauge
