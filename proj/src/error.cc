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

#include "summgauge/error.h"

#include <utility>

namespace summgauge {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedLine: return "MalformedLine";
    case ErrorKind::kSchemaViolation: return "SchemaViolation";
    case ErrorKind::kDuplicateTopic: return "DuplicateTopic";
    case ErrorKind::kEmptyAfterFiltering: return "EmptyAfterFiltering";
    case ErrorKind::kNoScus: return "NoSCUs";
    case ErrorKind::kInvalidConfig: return "InvalidConfig";
    case ErrorKind::kVocabularyMismatch: return "VocabularyMismatch";
    case ErrorKind::kSingleDocument: return "SingleDocument";
    case ErrorKind::kDegenerateReference: return "DegenerateReference";
    case ErrorKind::kDegenerateSummary: return "DegenerateSummary";
    case ErrorKind::kEmptyOracle: return "EmptyOracle";
    case ErrorKind::kNoSentences: return "NoSentences";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kUnknownAlgorithm: return "UnknownAlgorithm";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kZeroVariance: return "ZeroVariance";
    case ErrorKind::kNoOverlap: return "NoOverlap";
    case ErrorKind::kMissingOracle: return "MissingOracle";
    case ErrorKind::kMissingField: return "MissingField";
    case ErrorKind::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
      kind_(kind) {}

IngestError::IngestError(ErrorKind kind, std::size_t line_no, std::string field,
                         const std::string& detail)
    : Error(kind, "line " + std::to_string(line_no) +
                      (field.empty() ? "" : " field '" + field + "'") + ": " +
                      detail),
      line_no_(line_no),
      field_(std::move(field)) {}

}  // namespace summgauge
