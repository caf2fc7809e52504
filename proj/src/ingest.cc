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

#include "summgauge/ingest.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "json.hpp"
#include "summgauge/error.h"

namespace summgauge {
namespace {

using nlohmann::json;

bool IsBlank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  });
}

// Reads lines, stripping a trailing CR, and calls fn(line_no, line) for
// non-blank lines.
template <typename Fn>
void ForEachLine(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (IsBlank(line)) continue;
    fn(line_no, line);
  }
}

json ParseObject(std::size_t line_no, const std::string& line) {
  json value;
  try {
    value = json::parse(line);
  } catch (const json::parse_error& e) {
    throw IngestError(ErrorKind::kMalformedLine, line_no, "", e.what());
  }
  if (!value.is_object()) {
    throw IngestError(ErrorKind::kSchemaViolation, line_no, "",
                      "expected a JSON object");
  }
  return value;
}

std::string RequireText(const json& object, std::size_t line_no,
                        const std::string& field) {
  auto it = object.find(field);
  if (it == object.end()) {
    throw IngestError(ErrorKind::kSchemaViolation, line_no, field, "missing");
  }
  if (!it->is_string()) {
    throw IngestError(ErrorKind::kSchemaViolation, line_no, field,
                      "expected a string");
  }
  std::string text = it->get<std::string>();
  if (IsBlank(text)) {
    throw IngestError(ErrorKind::kSchemaViolation, line_no, field, "empty");
  }
  return text;
}

std::vector<std::string> RequireTextList(const json& object,
                                         std::size_t line_no,
                                         const std::string& field) {
  auto it = object.find(field);
  if (it == object.end()) {
    throw IngestError(ErrorKind::kSchemaViolation, line_no, field, "missing");
  }
  if (!it->is_array()) {
    throw IngestError(ErrorKind::kSchemaViolation, line_no, field,
                      "expected an array of strings");
  }
  if (it->empty()) {
    throw IngestError(ErrorKind::kSchemaViolation, line_no, field, "empty");
  }
  std::vector<std::string> out;
  out.reserve(it->size());
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& item = (*it)[i];
    if (!item.is_string()) {
      throw IngestError(ErrorKind::kSchemaViolation, line_no, field,
                        "element " + std::to_string(i) + " is not a string");
    }
    std::string text = item.get<std::string>();
    if (IsBlank(text)) {
      throw IngestError(ErrorKind::kSchemaViolation, line_no, field,
                        "element " + std::to_string(i) + " is empty");
    }
    out.push_back(std::move(text));
  }
  return out;
}

void WarnUnknownKeys(const json& object, std::size_t line_no,
                     const std::set<std::string>& known,
                     LoadDiagnostics* diagnostics) {
  if (diagnostics == nullptr) return;
  for (const auto& [key, value] : object.items()) {
    if (known.count(key) == 0) {
      diagnostics->warnings.push_back("line " + std::to_string(line_no) +
                                      ": ignoring unknown key '" + key + "'");
    }
  }
}

std::ifstream OpenInput(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIoError, "cannot open " + path.string());
  }
  return in;
}

}  // namespace

const Topic* Corpus::Find(const std::string& topic_id) const {
  for (const Topic& topic : topics) {
    if (topic.topic_id == topic_id) return &topic;
  }
  return nullptr;
}

Corpus LoadCorpus(const std::filesystem::path& path,
                  LoadDiagnostics* diagnostics) {
  std::ifstream in = OpenInput(path);
  return ReadCorpus(in, path.stem().string(), diagnostics);
}

Corpus ReadCorpus(std::istream& in, std::string name,
                  LoadDiagnostics* diagnostics) {
  static const std::set<std::string> kKnown = {"topic_id", "documents",
                                                "references"};
  Corpus corpus;
  corpus.name = std::move(name);
  std::set<std::string> seen;
  ForEachLine(in, [&](std::size_t line_no, const std::string& line) {
    const json object = ParseObject(line_no, line);
    Topic topic;
    topic.topic_id = RequireText(object, line_no, "topic_id");
    topic.documents = RequireTextList(object, line_no, "documents");
    topic.references = RequireTextList(object, line_no, "references");
    WarnUnknownKeys(object, line_no, kKnown, diagnostics);
    if (!seen.insert(topic.topic_id).second) {
      throw IngestError(ErrorKind::kDuplicateTopic, line_no, "topic_id",
                        "duplicate topic_id '" + topic.topic_id + "'");
    }
    corpus.topics.push_back(std::move(topic));
  });
  if (corpus.topics.empty()) {
    throw IngestError(ErrorKind::kSchemaViolation, 0, "",
                      "corpus contains no topics");
  }
  return corpus;
}

void WriteCorpus(const Corpus& corpus, std::ostream& out) {
  for (const Topic& topic : corpus.topics) {
    nlohmann::ordered_json line;
    line["topic_id"] = topic.topic_id;
    line["documents"] = topic.documents;
    line["references"] = topic.references;
    out << line.dump() << '\n';
  }
}

SystemRunLoad LoadSystemRun(const std::filesystem::path& path,
                            const Corpus& corpus, std::string system_name) {
  std::ifstream in = OpenInput(path);
  if (system_name.empty()) system_name = path.stem().string();
  return ReadSystemRun(in, corpus, std::move(system_name));
}

SystemRunLoad ReadSystemRun(std::istream& in, const Corpus& corpus,
                            std::string system_name) {
  static const std::set<std::string> kKnown = {"topic_id", "summary"};
  SystemRunLoad load;
  load.run.system_name = std::move(system_name);
  ForEachLine(in, [&](std::size_t line_no, const std::string& line) {
    const json object = ParseObject(line_no, line);
    std::string topic_id = RequireText(object, line_no, "topic_id");
    std::string summary = RequireText(object, line_no, "summary");
    WarnUnknownKeys(object, line_no, kKnown, &load.diagnostics);
    if (corpus.Find(topic_id) == nullptr) {
      load.diagnostics.warnings.push_back(
          "line " + std::to_string(line_no) + ": topic '" + topic_id +
          "' is not in corpus '" + corpus.name + "'");
    }
    if (!load.run.entries.emplace(topic_id, std::move(summary)).second) {
      throw IngestError(ErrorKind::kDuplicateTopic, line_no, "topic_id",
                        "duplicate topic_id '" + topic_id + "'");
    }
  });
  std::size_t covered = 0;
  for (const Topic& topic : corpus.topics) {
    covered += load.run.entries.count(topic.topic_id);
  }
  load.coverage = corpus.topics.empty()
                      ? 0.0
                      : static_cast<double>(covered) / corpus.topics.size();
  return load;
}

void WriteSystemRun(const SystemRun& run, const Corpus& corpus,
                    std::ostream& out) {
  auto write = [&out](const std::string& topic_id, const std::string& summary) {
    nlohmann::ordered_json line;
    line["topic_id"] = topic_id;
    line["summary"] = summary;
    out << line.dump() << '\n';
  };
  std::set<std::string> written;
  for (const Topic& topic : corpus.topics) {
    auto it = run.entries.find(topic.topic_id);
    if (it == run.entries.end()) continue;
    write(it->first, it->second);
    written.insert(it->first);
  }
  for (const auto& [topic_id, summary] : run.entries) {
    if (written.count(topic_id) == 0) write(topic_id, summary);
  }
}

}  // namespace summgauge
