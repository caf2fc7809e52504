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

// Corpus-level batch drivers shared by the CLI and the tests.

#ifndef SUMMGAUGE_PIPELINE_H_
#define SUMMGAUGE_PIPELINE_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "summgauge/baselines.h"
#include "summgauge/ingest.h"
#include "summgauge/oracle.h"
#include "summgauge/report.h"

namespace summgauge {

// Fills the stopword fields from the active lexicon and validates.
ReportConfig MakeReportConfig(ReportConfig config);

MetricReport RunCorpusStats(const Corpus& corpus, const ReportConfig& config,
                            int jobs);

struct GeneratedRun {
  SystemRun run;
  // Prefixed with the topic_id, e.g. "d30001: skipped (NoSentences: ...)".
  std::vector<std::string> warnings;
};

// Topics that yield no sentences are skipped with a warning.
GeneratedRun RunSummarizer(const Corpus& corpus, const SummarizerConfig& cfg,
                           const TextConfig& config, int jobs);

nlohmann::json SummarizerProvenance(const SummarizerConfig& cfg);

// Exact search falls back to greedy on topics above max_sentences; the
// warning names each such topic.
struct OracleRun {
  std::vector<std::optional<OracleResult>> results;  // corpus topic order
  GeneratedRun generated;
};

OracleRun RunOracle(const Corpus& corpus, const OracleOptions& options,
                    OracleMethod method, const TextConfig& config, int jobs);

struct EvalInput {
  SystemRun run;
  double coverage = 0.0;
  std::optional<nlohmann::json> provenance;
};

// One system section per input, in input order. The oracle is always
// computed for f1_vs_oracle; with_oracle also adds a section named
// "oracle" that evaluates the oracle's own summaries.
MetricReport RunSystemEval(const Corpus& corpus,
                           const std::vector<EvalInput>& inputs,
                           bool with_oracle, const ReportConfig& config,
                           int jobs);

}  // namespace summgauge

#endif  // SUMMGAUGE_PIPELINE_H_
