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

// Drives the summgauge binary end to end.

#include <sys/wait.h>

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"
#include "test_util.h"

namespace summgauge {
namespace {

namespace fs = std::filesystem;
using testing::ReadText;
using testing::SourcePath;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("summgauge_cli_") + info->name() + "_" +
            std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  Result Run(const std::string& args) const {
    const std::string out = Path("stdout.txt");
    const std::string err = Path("stderr.txt");
    const std::string command = std::string("'") + SUMMGAUGE_CLI + "' " + args +
                                " >'" + out + "' 2>'" + err + "'";
    const int status = std::system(command.c_str());
    Result r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = ReadText(out);
    r.err = ReadText(err);
    return r;
  }

  void Write(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name), std::ios::binary) << text;
  }

  fs::path dir_;
};

const std::string kToy = "'" + SourcePath("data/toy_corpus.jsonl") + "'";

TEST_F(CliTest, MalformedCorpusExitsTwoWithoutOutput) {
  Write("bad.jsonl", "{\"topic_id\": \"a\", \"documents\": [\"x\"]\nnot json\n");
  const Result r = Run("corpus-stats '" + Path("bad.jsonl") + "' -o '" +
                       Path("out.json") + "'");
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(fs::exists(Path("out.json")));
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST_F(CliTest, UnknownAlgorithmExitsTwo) {
  const Result r = Run("summarize " + kToy + " --algo pg");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("lexrank, textrank, mmr, greedy_concept"), std::string::npos);
}

TEST_F(CliTest, UsageErrorExitsTwo) {
  EXPECT_EQ(Run("corpus-stats").code, 2);
  EXPECT_EQ(Run("no-such-command").code, 2);
}

TEST_F(CliTest, SegmentsControlLayoutLength) {
  const Result r = Run("corpus-stats " + kToy + " --segments 4");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["corpus"]["aggregate"]["layout"].size(), 4u);
  EXPECT_EQ(j["config"]["corpus"]["segments"], 4);
}

TEST_F(CliTest, CorpusStatsMatchesGolden) {
  const Result r = Run("corpus-stats " + kToy + " -o '" + Path("stats.json") + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(ReadText(Path("stats.json")),
            ReadText(SourcePath("tests/golden/toy_corpus_stats.json")));
}

TEST_F(CliTest, SummarizeAndEvaluateMatchGolden) {
  Result r = Run("summarize " + kToy + " --algo lexrank -o '" + Path("lexrank.jsonl") + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(ReadText(Path("lexrank.jsonl")),
            ReadText(SourcePath("tests/golden/toy_lexrank.jsonl")));
  EXPECT_TRUE(fs::exists(Path("lexrank.jsonl.provenance.json")));
  r = Run("system-eval " + kToy + " -r '" + Path("lexrank.jsonl") +
          "' --with-oracle -o '" + Path("eval.json") + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(ReadText(Path("eval.json")),
            ReadText(SourcePath("tests/golden/toy_system_eval.json")));
}

TEST_F(CliTest, ShuffleSeedChangesOnlyShuffledLayout) {
  ASSERT_EQ(Run("summarize " + kToy + " --algo mmr -o '" + Path("mmr.jsonl") + "'").code, 0);
  const std::string run = " -r 'mmr=" + Path("mmr.jsonl") + "'";
  const Result a = Run("system-eval " + kToy + run + " --shuffle-seed 1");
  const Result b = Run("system-eval " + kToy + run + " --shuffle-seed 1");
  const Result c = Run("system-eval " + kToy + run + " --shuffle-seed 2");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto ja = nlohmann::json::parse(a.out)["systems"][0]["aggregate"];
  const auto jc = nlohmann::json::parse(c.out)["systems"][0]["aggregate"];
  EXPECT_EQ(ja["layout"], jc["layout"]);
  EXPECT_NE(ja["layout_shuffled"], jc["layout_shuffled"]);
  EXPECT_EQ(ja["rouge1"], jc["rouge1"]);
  EXPECT_EQ(nlohmann::json::parse(a.out)["systems"][0]["system_name"], "mmr");
}

TEST_F(CliTest, CorrelateTable) {
  const Result r = Run("correlate --table '" + SourcePath("tests/data/corpus_table.csv") +
                       "' --x ids --y pyr");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("rho: 0.829"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("n: 5"), std::string::npos) << r.out;
}

TEST_F(CliTest, ConstantColumnExitsTwo) {
  Write("t.csv", "a,b\n1,5\n2,5\n3,5\n");
  const Result r = Run("correlate --table '" + Path("t.csv") + "' --x a --y b");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ZeroVariance"), std::string::npos);
}

TEST_F(CliTest, ReportConvertAndAnalytics) {
  ASSERT_EQ(Run("summarize " + kToy + " --algo textrank -o '" + Path("tr.jsonl") + "'").code, 0);
  ASSERT_EQ(Run("system-eval " + kToy + " -r '" + Path("tr.jsonl") +
                "' --with-oracle -o '" + Path("eval.json") + "'").code, 0);
  Result r = Run("report-convert '" + Path("eval.json") + "' --to csv");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
  r = Run("report-convert '" + Path("eval.json") + "' --to html -o '" + Path("r.html") + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(ReadText(Path("r.html")).find("<svg"), std::string::npos);
  r = Run("report-convert '" + Path("eval.json") + "' --to json");
  EXPECT_EQ(r.out, ReadText(Path("eval.json")));
  r = Run("correlate --oracle-gap '" + Path("eval.json") + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  r = Run("correlate --rank rouge1_f1 '" + Path("eval.json") + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("tr"), std::string::npos);
  r = Run("correlate -a '" + Path("eval.json") + "' -b '" + Path("eval.json") +
          "' --x system:tr.rouge1.f1 --y system:tr.rouge1.recall");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("n: 20"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace summgauge
