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

#include <algorithm>
#include <numeric>

#include "summgauge/corpus_metrics.h"
#include "summgauge/error.h"
#include "summgauge/parallel.h"
#include "summgauge/system_metrics.h"

namespace summgauge {
namespace {

// Corpus topic indices ordered by topic_id.
std::vector<std::size_t> ByTopicId(const Corpus& corpus) {
  std::vector<std::size_t> order(corpus.topics.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return corpus.topics[a].topic_id < corpus.topics[b].topic_id;
  });
  return order;
}

std::string Skipped(const std::string& topic_id, const Error& e) {
  return topic_id + ": skipped (" + e.what() + ")";
}

}  // namespace

ReportConfig MakeReportConfig(ReportConfig config) {
  config.text.Validate();
  config.corpus.Validate();
  if (config.system.segments < 1) {
    throw Error(ErrorKind::kInvalidConfig, "segments must be >= 1");
  }
  if (config.oracle.n < 1) {
    throw Error(ErrorKind::kInvalidConfig, "oracle ROUGE order must be >= 1");
  }
  const Lexicon& lexicon = Lexicon::Default();
  config.stopword_fingerprint = lexicon.StopwordFingerprint();
  config.stopword_count = lexicon.stopword_count();
  return config;
}

MetricReport RunCorpusStats(const Corpus& corpus, const ReportConfig& config,
                            int jobs) {
  const std::vector<std::size_t> order = ByTopicId(corpus);
  CorpusSection section;
  section.topics = ParallelMap(order.size(), jobs, [&](std::size_t i) {
    return ComputeCorpusMetrics(corpus.topics[order[i]], config.text,
                                config.corpus);
  });
  section.aggregate = AggregateCorpus(section.topics, config);
  MetricReport report;
  report.corpus_name = corpus.name;
  report.topic_count = corpus.topics.size();
  report.config = config;
  report.corpus = std::move(section);
  return report;
}

GeneratedRun RunSummarizer(const Corpus& corpus, const SummarizerConfig& cfg,
                           const TextConfig& config, int jobs) {
  cfg.Validate();
  struct Outcome {
    std::optional<Summary> summary;
    std::string skipped;
  };
  const auto outcomes =
      ParallelMap(corpus.topics.size(), jobs, [&](std::size_t i) {
        const Topic& topic = corpus.topics[i];
        Outcome outcome;
        try {
          outcome.summary = Summarize(topic, cfg, config);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::kNoSentences) throw;
          outcome.skipped = Skipped(topic.topic_id, e);
        }
        return outcome;
      });
  GeneratedRun out;
  out.run.system_name = std::string(AlgorithmName(cfg.algorithm));
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const std::string& topic_id = corpus.topics[i].topic_id;
    if (!outcomes[i].summary.has_value()) {
      out.warnings.push_back(outcomes[i].skipped);
      continue;
    }
    for (const std::string& w : outcomes[i].summary->warnings) {
      out.warnings.push_back(topic_id + ": " + w);
    }
    out.run.entries[topic_id] = outcomes[i].summary->text;
  }
  return out;
}

nlohmann::json SummarizerProvenance(const SummarizerConfig& cfg) {
  return {{"algorithm", AlgorithmName(cfg.algorithm)},
          {"budget_words", cfg.budget_words},
          {"damping", cfg.damping},
          {"cosine_threshold", cfg.cosine_threshold},
          {"mmr_lambda", cfg.mmr_lambda},
          {"max_iterations", cfg.max_iterations},
          {"epsilon", cfg.epsilon}};
}

OracleRun RunOracle(const Corpus& corpus, const OracleOptions& options,
                    OracleMethod method, const TextConfig& config, int jobs) {
  struct Outcome {
    std::optional<OracleResult> result;
    std::string warning;
  };
  const auto outcomes =
      ParallelMap(corpus.topics.size(), jobs, [&](std::size_t i) {
        const Topic& topic = corpus.topics[i];
        Outcome outcome;
        try {
          if (method == OracleMethod::kExact) {
            try {
              outcome.result = ExactOracle(topic, options, config);
            } catch (const Error& e) {
              if (e.kind() != ErrorKind::kTooLarge) throw;
              outcome.result = GreedyOracle(topic, options, config);
              outcome.warning =
                  topic.topic_id + ": exact search too large, used greedy";
            }
          } else {
            outcome.result = GreedyOracle(topic, options, config);
          }
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::kNoSentences) throw;
          outcome.warning = Skipped(topic.topic_id, e);
        }
        return outcome;
      });
  OracleRun out;
  out.generated.run.system_name = "oracle";
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!outcomes[i].warning.empty()) {
      out.generated.warnings.push_back(outcomes[i].warning);
    }
    out.results.push_back(outcomes[i].result);
    if (outcomes[i].result.has_value()) {
      out.generated.run.entries[corpus.topics[i].topic_id] =
          outcomes[i].result->text;
    }
  }
  return out;
}

MetricReport RunSystemEval(const Corpus& corpus,
                           const std::vector<EvalInput>& inputs,
                           bool with_oracle, const ReportConfig& config,
                           int jobs) {
  const OracleRun oracle = RunOracle(corpus, config.oracle,
                                     config.oracle_method, config.text, jobs);
  const std::vector<std::size_t> order = ByTopicId(corpus);

  auto evaluate = [&](const std::string& name,
                      const std::map<std::string, std::string>& entries) {
    std::vector<std::size_t> present;
    for (std::size_t idx : order) {
      if (entries.count(corpus.topics[idx].topic_id) > 0) present.push_back(idx);
    }
    SystemSection section;
    section.system_name = name;
    section.topics = ParallelMap(present.size(), jobs, [&](std::size_t i) {
      const Topic& topic = corpus.topics[present[i]];
      const auto& result = oracle.results[present[i]];
      TopicSystemMetrics m = ComputeSystemMetrics(
          entries.at(topic.topic_id), topic,
          result.has_value() ? &*result : nullptr, config.text, config.system);
      if (!result.has_value()) m.notes.push_back("f1_vs_oracle: MissingOracle");
      return m;
    });
    section.aggregate = AggregateSystem(section.topics, config);
    section.coverage = corpus.topics.empty()
                           ? 0.0
                           : static_cast<double>(present.size()) /
                                 static_cast<double>(corpus.topics.size());
    return section;
  };

  MetricReport report;
  report.corpus_name = corpus.name;
  report.topic_count = corpus.topics.size();
  report.config = config;
  for (const EvalInput& input : inputs) {
    SystemSection section = evaluate(input.run.system_name, input.run.entries);
    section.coverage = input.coverage;
    section.provenance = input.provenance;
    report.systems.push_back(std::move(section));
  }
  if (with_oracle) {
    SystemSection section = evaluate("oracle", oracle.generated.run.entries);
    section.is_oracle = true;
    bool any_greedy = false, any_exact = false;
    for (const auto& r : oracle.results) {
      if (!r.has_value()) continue;
      (r->method == OracleMethod::kExact ? any_exact : any_greedy) = true;
    }
    section.oracle_method =
        any_exact && any_greedy ? "mixed" : (any_exact ? "exact" : "greedy");
    report.systems.push_back(std::move(section));
  }
  return report;
}

}  // namespace summgauge
