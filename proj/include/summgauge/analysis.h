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

// Cross-corpus and cross-system analytics over finished reports.

#ifndef SUMMGAUGE_ANALYSIS_H_
#define SUMMGAUGE_ANALYSIS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "summgauge/report.h"

namespace summgauge {

struct CorrelationResult {
  std::string series_a;
  std::string series_b;
  double rho = 0.0;
  std::size_t n = 0;
};

// Throws kLengthMismatch (sizes differ or fewer than 3 samples) and
// kZeroVariance.
CorrelationResult Pearson(const std::vector<double>& x,
                          const std::vector<double>& y,
                          std::string series_a = "x",
                          std::string series_b = "y");

// Metric names usable for system ranking: rouge1_recall, rouge1_precision,
// rouge1_f1, rouge2_*, f1_vs_oracle, sys_abstractness_<n>, sys_redundancy,
// idd, iddv. Throws kMissingField for other names.
std::optional<double> SystemMetricValue(const SystemAggregate& aggregate,
                                        std::string_view metric);

struct RankEntry {
  std::string system_name;
  double value = 0.0;
  int rank = 0;  // competition ranking: equal values share a rank
};

struct CorpusRanking {
  std::string corpus_name;
  std::vector<RankEntry> entries;  // by rank, then system name
  std::vector<std::string> top_systems;
};

struct RankTable {
  std::string metric;
  std::vector<CorpusRanking> corpora;
  // Corpora whose top system set differs from the first corpus's.
  int top_changes = 0;
  // Some pair of systems is ordered differently on two corpora.
  bool unstable = false;
};

// Ranks non-oracle systems per report, descending. Systems lacking the
// metric are left out. Throws kNoOverlap when no corpus has a ranked
// system, or when several corpora share no ranked system at all.
RankTable BuildRankTable(const std::vector<MetricReport>& reports,
                         std::string_view metric);

// 100 * best non-oracle ROUGE-1 recall / oracle ROUGE-1 recall. With no
// other system the oracle is the best system and the gap is 100.
// Throws kMissingOracle.
double OracleGap(const MetricReport& report);

// Per-topic series addressed by "corpus.<field>" or
// "system:<name>.<field>", where <field> is a dotted path inside a topic
// row (e.g. "rouge1.f1", "abstractness.2", "layout.0"). Nulls are kept as
// nullopt. Throws kMissingField.
std::map<std::string, std::optional<double>> TopicSeries(
    const nlohmann::json& report, std::string_view path);

// Pairs two topic series by topic_id, dropping pairs with a null side.
CorrelationResult CorrelateSeries(
    const std::map<std::string, std::optional<double>>& a,
    const std::map<std::string, std::optional<double>>& b,
    std::string name_a, std::string name_b);

// Numeric columns of a headed CSV table; blank cells are skipped pairwise.
CorrelationResult CorrelateTable(const std::string& csv_text,
                                 const std::string& x, const std::string& y);

}  // namespace summgauge

#endif  // SUMMGAUGE_ANALYSIS_H_
