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

#ifndef SUMMGAUGE_ERROR_H_
#define SUMMGAUGE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace summgauge {

// Classified failures raised by the library. The CLI exits with code 2 for
// every kind; other exceptions exit with code 1.
enum class ErrorKind {
  // ingest
  kMalformedLine,
  kSchemaViolation,
  kDuplicateTopic,
  // textproc
  kEmptyAfterFiltering,
  kNoScus,
  kInvalidConfig,
  // metrics
  kVocabularyMismatch,
  kSingleDocument,
  kDegenerateReference,
  kDegenerateSummary,
  kEmptyOracle,
  // oracle / baselines
  kNoSentences,
  kTooLarge,
  kUnknownAlgorithm,
  // analysis
  kLengthMismatch,
  kZeroVariance,
  kNoOverlap,
  kMissingOracle,
  kMissingField,
  kIoError,
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Errors tied to a position in a line-delimited input file. line_no is
// 1-based; field is empty when the error is not about one field.
class IngestError : public Error {
 public:
  IngestError(ErrorKind kind, std::size_t line_no, std::string field,
              const std::string& detail);

  std::size_t line_no() const { return line_no_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_no_;
  std::string field_;
};

}  // namespace summgauge

#endif  // SUMMGAUGE_ERROR_H_
