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

#include <gtest/gtest.h>

#include "summgauge/shuffle.h"

namespace summgauge {
namespace {

TEST(RougeTest, IdentityScoresOne) {
  const std::string text = "the quick brown fox jumps over the lazy dog";
  for (int n = 1; n <= 4; ++n) {
    const RougeScore s = RougeN(text, {text}, n, TextConfig{});
    EXPECT_DOUBLE_EQ(s.recall, 1.0);
    EXPECT_DOUBLE_EQ(s.precision, 1.0);
    EXPECT_DOUBLE_EQ(s.f1, 1.0);
  }
}

TEST(RougeTest, ClippedUnigramCounts) {
  const RougeScore s =
      RougeN("the cat ate", {"the cat sat on the mat"}, 1, TextConfig{});
  EXPECT_NEAR(s.recall, 2.0 / 6.0, 1e-12);
  EXPECT_NEAR(s.precision, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(s.f1, 2 * (2.0 / 6) * (2.0 / 3) / (2.0 / 6 + 2.0 / 3), 1e-12);
}

TEST(RougeTest, DisjointIsZero) {
  const RougeScore s = RougeN("alpha beta", {"gamma delta"}, 1, TextConfig{});
  EXPECT_EQ(s.recall, 0.0);
  EXPECT_EQ(s.precision, 0.0);
  EXPECT_EQ(s.f1, 0.0);
}

TEST(RougeTest, ShortTextScoresZero) {
  const RougeScore s = RougeN("word", {"word here"}, 2, TextConfig{});
  EXPECT_EQ(s.recall, 0.0);
  EXPECT_EQ(s.precision, 0.0);
}

TEST(RougeTest, MultiReferenceAggregation) {
  const std::vector<std::string> refs = {"a b c d", "a x y z"};
  const RougeScore mean = RougeN("a b", refs, 1, TextConfig{});
  EXPECT_NEAR(mean.recall, (0.5 + 0.25) / 2, 1e-12);
  EXPECT_NEAR(mean.precision, (1.0 + 0.5) / 2, 1e-12);
  EXPECT_NEAR(mean.f1, MakeRougeScore(1, mean.recall, mean.precision).f1,
              1e-12);
  const RougeScore best = RougeN("a b", refs, 1, TextConfig{},
                                 RefAggregation::kMax);
  EXPECT_DOUBLE_EQ(best.recall, 0.5);
  EXPECT_DOUBLE_EQ(best.precision, 1.0);
}

TEST(RougeTest, ScoresStayInUnitIntervalAndMatchesAreSymmetric) {
  Rng rng(7);
  const std::vector<std::string> vocab = {"a", "b", "c", "d", "e", "f"};
  for (int trial = 0; trial < 200; ++trial) {
    auto random_text = [&] {
      std::vector<std::string> terms(1 + rng.Below(10));
      for (auto& t : terms) t = vocab[rng.Below(vocab.size())];
      return terms;
    };
    const auto a = random_text();
    const auto b = random_text();
    for (int n = 1; n <= 2; ++n) {
      const NgramCounts ca = CountNgrams(a, n), cb = CountNgrams(b, n);
      EXPECT_EQ(ClippedMatches(ca, cb), ClippedMatches(cb, ca));
      const RougeScore s = RougeFromCounts(ca, {cb}, n);
      for (double v : {s.recall, s.precision, s.f1}) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
      }
      // Swapping candidate and reference swaps recall and precision.
      const RougeScore t = RougeFromCounts(cb, {ca}, n);
      EXPECT_DOUBLE_EQ(s.recall, t.precision);
      EXPECT_DOUBLE_EQ(s.f1, t.f1);
    }
  }
}

}  // namespace
}  // namespace summgauge
