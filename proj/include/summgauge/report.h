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

// Typed metric reports and their JSON, CSV and HTML renderings.
//
// JSON output is canonical: object keys sorted, floats printed with six
// decimals, NaN and infinities written as null. Equal inputs and configs
// therefore produce byte-identical files.

#ifndef SUMMGAUGE_REPORT_H_
#define SUMMGAUGE_REPORT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "summgauge/corpus_metrics.h"
#include "summgauge/oracle.h"
#include "summgauge/system_metrics.h"
#include "summgauge/textproc.h"

namespace summgauge {

inline constexpr char kSchemaVersion[] = "1.0";

// Every knob that influences a number in the report.
struct ReportConfig {
  TextConfig text;
  CorpusMetricsOptions corpus;
  SystemMetricsOptions system;
  OracleOptions oracle;
  OracleMethod oracle_method = OracleMethod::kGreedy;
  std::string stopword_fingerprint;
  std::size_t stopword_count = 0;
};

struct CorpusAggregate {
  std::map<int, std::optional<double>> abstractness;
  std::optional<double> ids;
  std::optional<double> redundancy;
  std::optional<double> pyramid;
  std::optional<double> inv_pyramid;
  std::optional<double> compression;
  LayoutVector layout;
};

struct CorpusSection {
  CorpusAggregate aggregate;
  std::vector<TopicCorpusMetrics> topics;  // sorted by topic_id
};

struct RougeAggregate {
  std::optional<double> recall;
  std::optional<double> precision;
  std::optional<double> f1;
};

struct SystemAggregate {
  RougeAggregate rouge1;
  RougeAggregate rouge2;
  std::optional<double> f1_vs_oracle;
  std::map<int, std::optional<double>> sys_abstractness;
  std::optional<double> sys_redundancy;
  std::optional<double> idd;
  std::optional<double> iddv;
  LayoutVector layout;
  LayoutVector layout_shuffled;
};

struct SystemSection {
  std::string system_name;
  bool is_oracle = false;
  // Set on oracle sections: "greedy", "exact" or "mixed".
  std::string oracle_method;
  double coverage = 0.0;
  SystemAggregate aggregate;
  std::vector<TopicSystemMetrics> topics;  // sorted by topic_id
  // Free-form generation settings, e.g. the summarizer config of a run.
  std::optional<nlohmann::json> provenance;
};

struct MetricReport {
  std::string schema_version = kSchemaVersion;
  std::string corpus_name;
  std::size_t topic_count = 0;
  ReportConfig config;
  std::optional<CorpusSection> corpus;
  std::vector<SystemSection> systems;
};

// Means over the non-null per-topic values; null when none exist.
std::optional<double> MeanOfPresent(
    const std::vector<std::optional<double>>& values);
CorpusAggregate AggregateCorpus(const std::vector<TopicCorpusMetrics>& topics,
                                const ReportConfig& config);
SystemAggregate AggregateSystem(const std::vector<TopicSystemMetrics>& topics,
                                const ReportConfig& config);

nlohmann::json ConfigToJson(const ReportConfig& config);
ReportConfig ConfigFromJson(const nlohmann::json& j);

nlohmann::json ReportToJson(const MetricReport& report);
// Throws Error(kMissingField) naming the first absent or mistyped field.
MetricReport ReportFromJson(const nlohmann::json& j);

// Sorted keys, two-space indent, %.6f floats, trailing newline.
std::string CanonicalJson(const nlohmann::json& j);
std::string EmitJson(const MetricReport& report);
MetricReport ParseReport(const std::string& text);

// Columns of EmitCsv, in order.
const std::vector<std::string>& CsvColumns();
// One row per (report, system); a report without systems yields one row
// with an empty system column.
std::string EmitCsv(const std::vector<MetricReport>& reports);

// Self-contained page with inline SVG charts and the JSON embedded.
std::string EmitHtml(const MetricReport& report);

}  // namespace summgauge

#endif  // SUMMGAUGE_REPORT_H_
