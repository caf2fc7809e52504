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

// summgauge command-line tool.
//
// Exit codes: 0 success, 2 invalid input or configuration, 1 internal error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "summgauge/analysis.h"
#include "summgauge/baselines.h"
#include "summgauge/error.h"
#include "summgauge/ingest.h"
#include "summgauge/parallel.h"
#include "summgauge/pipeline.h"
#include "summgauge/report.h"

namespace fs = std::filesystem;
using summgauge::Error;
using summgauge::ErrorKind;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 1;

// Writes via a sibling temp file and rename, so a failed command never
// leaves a partial output behind.
void WriteAtomic(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  const fs::path target(path);
  fs::path tmp = target;
  tmp += fmt::format(".tmp.{}", static_cast<long>(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::kIoError, "cannot write " + tmp.string());
    out << content;
    out.close();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw Error(ErrorKind::kIoError, "cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorKind::kIoError, "cannot rename onto " + path);
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIoError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void PrintWarnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';
}

summgauge::Corpus LoadCorpusOrThrow(const std::string& path) {
  summgauge::LoadDiagnostics diagnostics;
  summgauge::Corpus corpus = summgauge::LoadCorpus(path, &diagnostics);
  PrintWarnings(diagnostics.warnings);
  return corpus;
}

// Flags shared by every metric-producing command.
struct CommonFlags {
  int jobs = summgauge::DefaultJobs();
  std::uint64_t seed = 13;
  std::optional<std::uint64_t> shuffle_seed;
  int segments = 3;
  bool stem = false;
  bool no_stem_units = false;
  bool drop_ngram_stopwords = false;
  std::vector<int> ngram_orders = {1, 2, 3};
  std::string log_base = "e";
  double alpha = 0.01;
  double jaccard = 0.6;
  bool per_document_redundancy = false;
  bool normalized = false;
  bool no_pairwise = false;
  std::string ref_agg = "mean";
  int oracle_n = 1;
  int budget = 0;
  bool fill_budget = false;
  std::string oracle_method = "greedy";
  int max_sentences = 14;

  void AddText(CLI::App* app) {
    app->add_option("--jobs,-j", jobs, "Worker threads (default: logical CPUs)")
        ->check(CLI::PositiveNumber);
    app->add_flag("--stem", stem, "Porter-stem n-gram terms");
    app->add_flag("--no-stem-units", no_stem_units,
                  "Do not stem semantic units");
    app->add_flag("--drop-ngram-stopwords", drop_ngram_stopwords,
                  "Remove stopwords before forming n-grams");
    app->add_option("--ngram-orders", ngram_orders,
                    "n-gram orders for abstractness")
        ->capture_default_str()
        ->check(CLI::Range(1, 4));
    app->add_option("--log-base", log_base, "Logarithm base: e or 2")
        ->capture_default_str()
        ->check(CLI::IsMember({"e", "2"}));
    app->add_option("--alpha", alpha, "Additive smoothing for distributions")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
  }

  void AddCorpus(CLI::App* app) {
    app->add_option("--segments", segments, "Layout-bias segments")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app->add_option("--jaccard", jaccard, "SCU merge threshold")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    app->add_flag("--per-document-redundancy", per_document_redundancy,
                  "Average redundancy per document instead of pooling");
    app->add_flag("--normalized", normalized,
                  "Normalize the inverse pyramid by mean tier coverage");
    app->add_flag("--no-pairwise", no_pairwise,
                  "Omit per-topic pairwise relevance matrices");
  }

  void AddSystem(CLI::App* app) {
    app->add_option("--seed", seed, "Seed for every stochastic step")
        ->capture_default_str();
    app->add_option("--shuffle-seed", shuffle_seed,
                    "Seed of the shuffled layout ablation (default: --seed)");
    app->add_option("--ref-agg", ref_agg,
                    "Multi-reference ROUGE aggregation: mean or max")
        ->capture_default_str()
        ->check(CLI::IsMember({"mean", "max"}));
  }

  void AddOracle(CLI::App* app) {
    app->add_option("--oracle-n", oracle_n, "ROUGE order the oracle maximizes")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app->add_option("--budget", budget,
                    "Word budget (default: mean reference length)");
    app->add_flag("--fill-budget", fill_budget,
                  "Keep adding zero-gain sentences while they fit");
    app->add_option("--oracle-method", oracle_method, "greedy or exact")
        ->capture_default_str()
        ->check(CLI::IsMember({"greedy", "exact"}));
    app->add_option("--max-sentences", max_sentences,
                    "Largest topic the exact oracle searches")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  }

  summgauge::ReportConfig Build() const {
    summgauge::ReportConfig c;
    c.text.stem = stem;
    c.text.stem_units = !no_stem_units;
    c.text.ngram_stopwords = drop_ngram_stopwords
                                 ? summgauge::StopwordPolicy::kDrop
                                 : summgauge::StopwordPolicy::kKeep;
    c.text.ngram_orders = ngram_orders;
    c.text.log_base =
        log_base == "2" ? summgauge::LogBase::kTwo : summgauge::LogBase::kNatural;
    c.text.smoothing_alpha = alpha;
    c.corpus.segments = segments;
    c.corpus.jaccard_threshold = jaccard;
    c.corpus.per_document_redundancy = per_document_redundancy;
    c.corpus.normalized_inverse_pyramid = normalized;
    c.corpus.pairwise_relevance = !no_pairwise;
    c.system.segments = segments;
    c.system.shuffle_seed = shuffle_seed.value_or(seed);
    c.system.ref_aggregation = ref_agg == "max"
                                   ? summgauge::RefAggregation::kMax
                                   : summgauge::RefAggregation::kMean;
    c.oracle.n = oracle_n;
    c.oracle.budget_words = budget;
    c.oracle.fill_budget = fill_budget;
    c.oracle.max_sentences = max_sentences;
    c.oracle_method = oracle_method == "exact" ? summgauge::OracleMethod::kExact
                                               : summgauge::OracleMethod::kGreedy;
    return summgauge::MakeReportConfig(c);
  }
};

struct ReportOutputs {
  std::string json_path;
  std::string csv_path;
  std::string html_path;

  void Add(CLI::App* app) {
    app->add_option("--out,-o", json_path,
                    "Canonical JSON report (default: stdout)");
    app->add_option("--csv", csv_path, "Also write the CSV flattening here");
    app->add_option("--html", html_path, "Also write the HTML report here");
  }

  void Write(const summgauge::MetricReport& report) const {
    // Render everything first so a failure leaves no file behind.
    const std::string json = summgauge::EmitJson(report);
    const std::string csv =
        csv_path.empty() ? "" : summgauge::EmitCsv({report});
    const std::string html =
        html_path.empty() ? "" : summgauge::EmitHtml(report);
    if (!csv_path.empty()) WriteAtomic(csv_path, csv);
    if (!html_path.empty()) WriteAtomic(html_path, html);
    WriteAtomic(json_path, json);
  }
};

std::string ProvenancePath(const std::string& run_path) {
  return run_path + ".provenance.json";
}

int Run(int argc, char** argv) {
  CLI::App app{"summgauge: corpus and system metrics for multi-document "
               "summarization"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "summgauge 1.0.0");

  // corpus-stats
  CommonFlags stats_flags;
  ReportOutputs stats_out;
  std::string stats_corpus;
  CLI::App* stats = app.add_subcommand(
      "corpus-stats", "Corpus metrics: abstractness, IDS, redundancy, "
                      "pyramid, inverse pyramid, layout bias, compression");
  stats->add_option("corpus", stats_corpus, "Corpus JSONL file")->required();
  stats_flags.AddText(stats);
  stats_flags.AddCorpus(stats);
  stats_out.Add(stats);

  // summarize
  CommonFlags sum_flags;
  std::string sum_corpus, sum_out, sum_algo = "lexrank";
  summgauge::SummarizerConfig sum_cfg;
  CLI::App* summarize =
      app.add_subcommand("summarize", "Run a built-in extractive summarizer");
  summarize->add_option("corpus", sum_corpus, "Corpus JSONL file")->required();
  summarize->add_option("--algo", sum_algo,
                        "lexrank, textrank, mmr or greedy_concept")
      ->capture_default_str();
  summarize->add_option("--out,-o", sum_out, "Run JSONL (default: stdout)");
  summarize->add_option("--budget", sum_cfg.budget_words,
                        "Word budget (default: mean reference length)");
  summarize->add_option("--damping", sum_cfg.damping, "PageRank damping")
      ->capture_default_str();
  summarize->add_option("--cosine-threshold", sum_cfg.cosine_threshold,
                        "LexRank edge cutoff")
      ->capture_default_str();
  summarize->add_option("--mmr-lambda", sum_cfg.mmr_lambda,
                        "MMR relevance/diversity trade-off")
      ->capture_default_str();
  summarize->add_option("--max-iterations", sum_cfg.max_iterations,
                        "Power-iteration cap")
      ->capture_default_str();
  summarize->add_option("--epsilon", sum_cfg.epsilon,
                        "Power-iteration L1 tolerance")
      ->capture_default_str();
  sum_flags.AddText(summarize);

  // oracle
  CommonFlags oracle_flags;
  std::string oracle_corpus, oracle_out;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Extractive oracle summaries maximizing ROUGE recall");
  oracle->add_option("corpus", oracle_corpus, "Corpus JSONL file")->required();
  oracle->add_option("--out,-o", oracle_out, "Run JSONL (default: stdout)");
  oracle_flags.AddText(oracle);
  oracle_flags.AddOracle(oracle);

  // system-eval
  CommonFlags eval_flags;
  ReportOutputs eval_out;
  std::string eval_corpus;
  std::vector<std::string> eval_runs;
  bool with_oracle = false;
  CLI::App* eval = app.add_subcommand(
      "system-eval", "System metrics for one or more run files");
  eval->add_option("corpus", eval_corpus, "Corpus JSONL file")->required();
  eval->add_option("--run,-r", eval_runs,
                   "Run JSONL; NAME=PATH sets the system name")
      ->required();
  eval->add_flag("--with-oracle", with_oracle,
                 "Add a section evaluating the oracle's own summaries");
  eval_flags.AddText(eval);
  eval_flags.AddCorpus(eval);
  eval_flags.AddSystem(eval);
  eval_flags.AddOracle(eval);
  eval_out.Add(eval);

  // correlate
  std::string report_a, report_b, table, x_field, y_field, rank_metric;
  std::vector<std::string> rank_reports;
  bool oracle_gap = false;
  CLI::App* correlate = app.add_subcommand(
      "correlate",
      "Pearson correlation between two per-topic series or CSV columns; "
      "also rank tables and oracle gaps across reports");
  correlate->add_option("--report-a,-a", report_a,
                        "Report supplying --x (and --y unless -b is given)");
  correlate->add_option("--report-b,-b", report_b, "Report supplying --y");
  correlate->add_option("--table", table,
                        "Headed CSV; --x and --y name numeric columns");
  correlate->add_option("--x", x_field,
                        "Column, or corpus.<field> / system:<name>.<field>");
  correlate->add_option("--y", y_field, "As --x");
  correlate->add_option("--rank", rank_metric,
                        "Rank systems per report by this aggregate metric");
  correlate->add_flag("--oracle-gap", oracle_gap,
                      "Print 100 * best system R1 / oracle R1 per report");
  correlate->add_option("reports", rank_reports,
                        "Reports for --rank and --oracle-gap");

  // report-convert
  std::vector<std::string> convert_inputs;
  std::string convert_to = "csv", convert_out;
  CLI::App* convert = app.add_subcommand(
      "report-convert", "Re-emit JSON reports as canonical JSON, CSV or HTML");
  convert->add_option("reports", convert_inputs, "JSON reports")->required();
  convert->add_option("--to", convert_to, "json, csv or html")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv", "html"}));
  convert->add_option("--out,-o", convert_out, "Output (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  if (stats->parsed()) {
    const summgauge::ReportConfig config = stats_flags.Build();
    const summgauge::Corpus corpus = LoadCorpusOrThrow(stats_corpus);
    const summgauge::MetricReport report =
        summgauge::RunCorpusStats(corpus, config, stats_flags.jobs);
    for (const auto& t : report.corpus->topics) {
      for (const std::string& note : t.notes) {
        std::cerr << "note: " << t.topic_id << ": " << note << '\n';
      }
    }
    stats_out.Write(report);
  } else if (summarize->parsed()) {
    sum_cfg.algorithm = summgauge::ParseAlgorithm(sum_algo);
    const summgauge::ReportConfig config = sum_flags.Build();
    const summgauge::Corpus corpus = LoadCorpusOrThrow(sum_corpus);
    const summgauge::GeneratedRun run =
        summgauge::RunSummarizer(corpus, sum_cfg, config.text, sum_flags.jobs);
    PrintWarnings(run.warnings);
    std::ostringstream out;
    summgauge::WriteSystemRun(run.run, corpus, out);
    if (!sum_out.empty() && sum_out != "-") {
      WriteAtomic(ProvenancePath(sum_out),
                  summgauge::CanonicalJson(
                      summgauge::SummarizerProvenance(sum_cfg)));
    }
    WriteAtomic(sum_out, out.str());
  } else if (oracle->parsed()) {
    const summgauge::ReportConfig config = oracle_flags.Build();
    const summgauge::Corpus corpus = LoadCorpusOrThrow(oracle_corpus);
    const summgauge::OracleRun run = summgauge::RunOracle(
        corpus, config.oracle, config.oracle_method, config.text,
        oracle_flags.jobs);
    PrintWarnings(run.generated.warnings);
    std::ostringstream out;
    summgauge::WriteSystemRun(run.generated.run, corpus, out);
    WriteAtomic(oracle_out, out.str());
  } else if (eval->parsed()) {
    const summgauge::ReportConfig config = eval_flags.Build();
    const summgauge::Corpus corpus = LoadCorpusOrThrow(eval_corpus);
    std::vector<summgauge::EvalInput> inputs;
    for (const std::string& arg : eval_runs) {
      std::string name, path = arg;
      if (const auto eq = arg.find('='); eq != std::string::npos) {
        name = arg.substr(0, eq);
        path = arg.substr(eq + 1);
      }
      summgauge::SystemRunLoad load =
          summgauge::LoadSystemRun(path, corpus, name);
      PrintWarnings(load.diagnostics.warnings);
      summgauge::EvalInput input;
      input.run = std::move(load.run);
      input.coverage = load.coverage;
      if (fs::exists(ProvenancePath(path))) {
        input.provenance = nlohmann::json::parse(ReadFile(ProvenancePath(path)));
      }
      inputs.push_back(std::move(input));
    }
    const summgauge::MetricReport report = summgauge::RunSystemEval(
        corpus, inputs, with_oracle, config, eval_flags.jobs);
    eval_out.Write(report);
  } else if (correlate->parsed()) {
    if (!rank_metric.empty() || oracle_gap) {
      if (rank_reports.empty()) {
        throw Error(ErrorKind::kMissingField, "no reports given");
      }
      std::vector<summgauge::MetricReport> reports;
      for (const std::string& path : rank_reports) {
        reports.push_back(summgauge::ParseReport(ReadFile(path)));
      }
      if (!rank_metric.empty()) {
        const summgauge::RankTable t =
            summgauge::BuildRankTable(reports, rank_metric);
        std::cout << "metric: " << t.metric << '\n';
        for (const auto& c : t.corpora) {
          std::cout << "corpus " << c.corpus_name << ":\n";
          for (const auto& e : c.entries) {
            std::cout << fmt::format("  {:>3}  {:<24} {:.6f}\n", e.rank,
                                     e.system_name, e.value);
          }
        }
        std::cout << "top-system changes: " << t.top_changes << '\n'
                  << "unstable: " << (t.unstable ? "yes" : "no") << '\n';
      }
      if (oracle_gap) {
        for (const auto& r : reports) {
          std::cout << fmt::format("oracle_gap {}: {:.6f}\n", r.corpus_name,
                                   summgauge::OracleGap(r));
        }
      }
      return 0;
    }
    if (x_field.empty() || y_field.empty()) {
      throw Error(ErrorKind::kMissingField, "--x and --y are required");
    }
    summgauge::CorrelationResult result;
    if (!table.empty()) {
      result = summgauge::CorrelateTable(ReadFile(table), x_field, y_field);
    } else {
      if (report_a.empty()) {
        throw Error(ErrorKind::kMissingField, "--report-a or --table is required");
      }
      const nlohmann::json a = nlohmann::json::parse(ReadFile(report_a));
      const nlohmann::json b =
          report_b.empty() ? a : nlohmann::json::parse(ReadFile(report_b));
      result = summgauge::CorrelateSeries(summgauge::TopicSeries(a, x_field),
                                          summgauge::TopicSeries(b, y_field),
                                          x_field, y_field);
    }
    std::cout << fmt::format("x: {}\ny: {}\nrho: {:.6f}\nn: {}\n",
                             result.series_a, result.series_b, result.rho,
                             result.n);
  } else if (convert->parsed()) {
    std::vector<summgauge::MetricReport> reports;
    for (const std::string& path : convert_inputs) {
      reports.push_back(summgauge::ParseReport(ReadFile(path)));
    }
    std::string content;
    if (convert_to == "csv") {
      content = summgauge::EmitCsv(reports);
    } else {
      if (reports.size() != 1) {
        throw Error(ErrorKind::kInvalidConfig,
                    convert_to + " output takes exactly one report");
      }
      content = convert_to == "json" ? summgauge::EmitJson(reports[0])
                                     : summgauge::EmitHtml(reports[0]);
    }
    WriteAtomic(convert_out, content);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const summgauge::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: invalid JSON: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
