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

// Loading and writing of the JSONL corpus and system-run interchange files.
//
// Corpus line:     {"topic_id": str, "documents": [str, ...], "references": [str, ...]}
// System-run line: {"topic_id": str, "summary": str}

#ifndef SUMMGAUGE_INGEST_H_
#define SUMMGAUGE_INGEST_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace summgauge {

// One summarization instance: candidate documents plus reference summaries.
struct Topic {
  std::string topic_id;
  std::vector<std::string> documents;
  std::vector<std::string> references;

  bool operator==(const Topic&) const = default;
};

struct Corpus {
  std::string name;
  std::vector<Topic> topics;

  const Topic* Find(const std::string& topic_id) const;

  bool operator==(const Corpus&) const = default;
};

struct SystemRun {
  std::string system_name;
  std::map<std::string, std::string> entries;  // topic_id -> summary

  bool operator==(const SystemRun&) const = default;
};

// Non-fatal findings collected while loading.
struct LoadDiagnostics {
  std::vector<std::string> warnings;
};

// Throws IngestError (kMalformedLine, kSchemaViolation, kDuplicateTopic).
// Blank lines are skipped. The corpus name defaults to the file stem.
Corpus LoadCorpus(const std::filesystem::path& path,
                  LoadDiagnostics* diagnostics = nullptr);
Corpus ReadCorpus(std::istream& in, std::string name,
                  LoadDiagnostics* diagnostics = nullptr);

void WriteCorpus(const Corpus& corpus, std::ostream& out);

struct SystemRunLoad {
  SystemRun run;
  // Fraction of corpus topics that have an entry in the run.
  double coverage = 0.0;
  LoadDiagnostics diagnostics;
};

// Entries whose topic_id is absent from the corpus are kept but produce a
// warning. system_name defaults to the file stem when empty.
SystemRunLoad LoadSystemRun(const std::filesystem::path& path,
                            const Corpus& corpus,
                            std::string system_name = {});
SystemRunLoad ReadSystemRun(std::istream& in, const Corpus& corpus,
                            std::string system_name);

// Entries are written in corpus topic order; entries for unknown topics
// follow in topic_id order.
void WriteSystemRun(const SystemRun& run, const Corpus& corpus,
                    std::ostream& out);

}  // namespace summgauge

#endif  // SUMMGAUGE_INGEST_H_
