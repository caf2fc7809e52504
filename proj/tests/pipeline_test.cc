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

#include "summgauge/pipeline.h"

#include <stdexcept>

#include <gtest/gtest.h>

#include "summgauge/error.h"
#include "summgauge/parallel.h"
#include "test_util.h"

namespace summgauge {
namespace {

const Corpus& Toy() {
  static const Corpus corpus =
      LoadCorpus(testing::SourcePath("data/toy_corpus.jsonl"));
  return corpus;
}

TEST(ParallelMapTest, ResultsInIndexOrder) {
  const auto out = ParallelMap(100, 8, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], i * i);
}

TEST(ParallelMapTest, RethrowsLowestFailingIndex) {
  for (int jobs : {1, 4, 16}) {
    try {
      ParallelMap(64, jobs, [](std::size_t i) -> int {
        if (i == 7 || i == 40 || i == 63) throw std::runtime_error(std::to_string(i));
        return 0;
      });
      FAIL();
    } catch (const std::runtime_error& e) {
      EXPECT_STREQ(e.what(), "7");
    }
  }
}

TEST(PipelineTest, CorpusStatsIndependentOfJobs) {
  const ReportConfig config = MakeReportConfig(ReportConfig{});
  EXPECT_EQ(EmitJson(RunCorpusStats(Toy(), config, 1)),
            EmitJson(RunCorpusStats(Toy(), config, 8)));
}

TEST(PipelineTest, SystemEvalIndependentOfJobs) {
  const ReportConfig config = MakeReportConfig(ReportConfig{});
  SummarizerConfig cfg;
  cfg.algorithm = Algorithm::kMmr;
  const GeneratedRun one = RunSummarizer(Toy(), cfg, config.text, 1);
  const GeneratedRun many = RunSummarizer(Toy(), cfg, config.text, 8);
  EXPECT_EQ(one.run, many.run);
  const std::vector<EvalInput> inputs = {{one.run, 1.0, {}}};
  EXPECT_EQ(EmitJson(RunSystemEval(Toy(), inputs, true, config, 1)),
            EmitJson(RunSystemEval(Toy(), inputs, true, config, 8)));
}

TEST(PipelineTest, SkipsTopicsWithoutSentences) {
  Corpus corpus;
  corpus.name = "c";
  corpus.topics = {testing::MakeTopic({"Storm hits coast.", "Rain falls."}, {"Storm."}, "a"),
                   testing::MakeTopic({"?!", "..."}, {"Nothing."}, "b")};
  const GeneratedRun g = RunSummarizer(corpus, SummarizerConfig{}, TextConfig{}, 2);
  EXPECT_EQ(g.run.entries.size(), 1u);
  ASSERT_EQ(g.warnings.size(), 1u);
  EXPECT_EQ(g.warnings[0].rfind("b: skipped", 0), 0u);
}

TEST(PipelineTest, EvalCoversOnlyRunTopics) {
  const ReportConfig config = MakeReportConfig(ReportConfig{});
  SystemRun run;
  run.system_name = "partial";
  run.entries[Toy().topics[2].topic_id] = Toy().topics[2].references[0];
  run.entries[Toy().topics[0].topic_id] = Toy().topics[0].references[0];
  const MetricReport r = RunSystemEval(Toy(), {{run, 0.1, {}}}, false, config, 2);
  ASSERT_EQ(r.systems.size(), 1u);
  ASSERT_EQ(r.systems[0].topics.size(), 2u);
  EXPECT_LT(r.systems[0].topics[0].topic_id, r.systems[0].topics[1].topic_id);
  EXPECT_EQ(r.topic_count, Toy().topics.size());
}

TEST(PipelineTest, OracleSectionScoresOneAgainstItself) {
  const ReportConfig config = MakeReportConfig(ReportConfig{});
  const MetricReport r = RunSystemEval(Toy(), {}, true, config, 4);
  ASSERT_EQ(r.systems.size(), 1u);
  EXPECT_TRUE(r.systems[0].is_oracle);
  EXPECT_EQ(r.systems[0].oracle_method, "greedy");
  EXPECT_NEAR(*r.systems[0].aggregate.f1_vs_oracle, 1.0, 1e-12);
}

TEST(PipelineTest, ExactOracleFallsBackOnLargeTopics) {
  OracleOptions options;
  options.max_sentences = 3;
  const OracleRun run = RunOracle(Toy(), options, OracleMethod::kExact, TextConfig{}, 4);
  EXPECT_EQ(run.results.size(), Toy().topics.size());
  EXPECT_FALSE(run.generated.warnings.empty());
  EXPECT_EQ(run.generated.run.entries.size(), Toy().topics.size());
}

TEST(PipelineTest, InvalidConfigRejected) {
  ReportConfig config;
  config.corpus.segments = 1;
  EXPECT_THROW(MakeReportConfig(config), Error);
}

}  // namespace
}  // namespace summgauge
