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

// Deterministic text normalization shared by every metric.
//
// Two token views are derived from the same tokenizer output:
//   * n-gram terms: lowercased, stopwords kept, stemming off by default.
//     Used by ROUGE, abstractness, compression and overlap similarity.
//   * semantic units: lowercased, stopwords dropped, Porter-stemmed.
//     Used by unit distributions, SCUs and TF-IDF vectors.

#ifndef SUMMGAUGE_TEXTPROC_H_
#define SUMMGAUGE_TEXTPROC_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace summgauge {

enum class StopwordPolicy { kKeep, kDrop };
enum class LogBase { kNatural, kTwo };

struct TextConfig {
  bool lowercase = true;
  // Porter stemming of n-gram terms.
  bool stem = false;
  // Porter stemming of semantic units.
  bool stem_units = true;
  StopwordPolicy ngram_stopwords = StopwordPolicy::kKeep;
  StopwordPolicy unit_stopwords = StopwordPolicy::kDrop;
  std::vector<int> ngram_orders = {1, 2, 3};
  LogBase log_base = LogBase::kNatural;
  // Additive smoothing for unit distributions compared across texts.
  double smoothing_alpha = 0.01;

  // Throws Error(kInvalidConfig).
  void Validate() const;
};

double LogIn(LogBase base, double x);

// Stopword and abbreviation resources. The defaults are compiled in from
// resources/; SUMMGAUGE_STOPWORDS names a replacement stopword file.
class Lexicon {
 public:
  static const Lexicon& Default();
  static Lexicon FromText(std::string_view stopwords,
                          std::string_view abbreviations);

  bool IsStopword(std::string_view lowered) const;
  // Returns nullopt when `lowered` (without its final period) is not a
  // known abbreviation, true for title abbreviations that never end a
  // sentence, false for ordinary ones.
  std::optional<bool> AbbreviationIsPrefix(std::string_view lowered) const;

  std::size_t stopword_count() const { return stopwords_.size(); }
  // FNV-1a over the sorted stopword list, as 16 hex digits.
  std::string StopwordFingerprint() const;

 private:
  std::unordered_set<std::string> stopwords_;
  std::unordered_map<std::string, bool> abbreviations_;
};

struct Token {
  std::string text;  // normalized (lowercased when requested)
  std::size_t begin = 0;  // byte offsets into the source text
  std::size_t end = 0;
};

// Splits on non-alphanumeric code points. Internal apostrophes and hyphens
// are kept ("don't", "well-known"); U+2019 is folded to an apostrophe.
std::vector<Token> Tokenize(std::string_view text, bool lowercase = true);

struct Sentence {
  std::size_t index = 0;  // position within its text
  std::vector<std::string> tokens;
  std::size_t begin = 0;  // byte span into the source text
  std::size_t end = 0;

  std::string_view Text(std::string_view source) const {
    return source.substr(begin, end - begin);
  }
};

// Sentences have at least one token; punctuation-only fragments are folded
// into a neighbouring sentence. Text without a terminator is one sentence.
std::vector<Sentence> SegmentSentences(std::string_view text,
                                       const TextConfig& config = {});

std::vector<std::string> NgramTerms(const std::vector<std::string>& tokens,
                                    const TextConfig& config);
std::vector<std::string> NgramTerms(std::string_view text,
                                    const TextConfig& config);
std::vector<std::string> UnitTerms(const std::vector<std::string>& tokens,
                                   const TextConfig& config);
std::vector<std::string> UnitTerms(std::string_view text,
                                   const TextConfig& config);

// n-gram -> multiplicity. Grams are joined with a single space.
using NgramCounts = std::unordered_map<std::string, int>;

NgramCounts CountNgrams(const std::vector<std::string>& terms, int n);
std::set<std::string> NgramSet(const std::vector<std::string>& terms, int n);
int TotalCount(const NgramCounts& counts);

// Probability distribution over semantic units, defined on an explicit
// vocabulary. With smoothing_alpha > 0 every vocabulary unit has mass.
class UnitDistribution {
 public:
  UnitDistribution() = default;
  UnitDistribution(std::map<std::string, double> probabilities,
                   double smoothing_alpha);

  double Probability(const std::string& unit) const;
  const std::map<std::string, double>& probabilities() const {
    return probabilities_;
  }
  double smoothing_alpha() const { return smoothing_alpha_; }
  std::size_t size() const { return probabilities_.size(); }
  bool SameVocabulary(const UnitDistribution& other) const;

 private:
  std::map<std::string, double> probabilities_;
  double smoothing_alpha_ = 0.0;
};

using UnitCounts = std::map<std::string, int>;

UnitCounts CountUnits(const std::vector<std::string>& texts,
                      const TextConfig& config);

// P(w) = (count(w) + alpha) / (total + alpha * |vocabulary|).
// Throws kEmptyAfterFiltering when the texts hold no units and
// kVocabularyMismatch when a counted unit is missing from the vocabulary.
UnitDistribution BuildDistribution(const UnitCounts& counts,
                                   const std::set<std::string>& vocabulary,
                                   double alpha);
UnitDistribution BuildDistribution(const std::vector<std::string>& texts,
                                   const TextConfig& config,
                                   const std::set<std::string>& vocabulary);
// Unsmoothed distribution over the texts' own units.
UnitDistribution BuildDistribution(const std::vector<std::string>& texts,
                                   const TextConfig& config);

std::set<std::string> UnionVocabulary(const UnitCounts& a,
                                      const UnitCounts& b);

double Jaccard(const std::set<std::string>& a, const std::set<std::string>& b);

// A clause-level unit set with at least three content words.
struct Clause {
  std::set<std::string> units;
  std::size_t begin = 0;  // byte span into the source text
  std::size_t end = 0;
};

// Splits at . ; : , and at the conjunctions and/but/or/while/whereas, then
// keeps clauses carrying three or more distinct content units.
std::vector<Clause> ExtractClauses(std::string_view text,
                                   const TextConfig& config);

struct Scu {
  int id = 0;
  std::set<std::string> units;  // representative: the earliest member
  int weight = 0;  // distinct contributing documents
  std::size_t doc_index = 0;  // source of the representative
  std::size_t begin = 0;
  std::size_t end = 0;
  std::set<std::size_t> documents;
  std::vector<std::set<std::string>> members;
};

struct PyramidTier {
  int weight = 0;
  std::vector<std::size_t> scus;  // indices into Pyramid::scus
};

struct Pyramid {
  std::vector<Scu> scus;  // ordered by descending weight, then id
  std::vector<PyramidTier> tiers;  // descending weight

  // Highest Jaccard over SCU members; ties go to the earlier SCU.
  std::optional<std::size_t> BestMatch(const std::set<std::string>& units,
                                       double threshold) const;
};

// Clause candidates are grouped by single-linkage over Jaccard >= threshold,
// so lowering the threshold only ever merges groups. Throws kNoScus.
Pyramid ExtractScus(const std::vector<std::string>& documents,
                    const TextConfig& config, double jaccard_threshold = 0.6);

// Sparse term-weight vector with term ids sorted ascending.
struct SparseVector {
  std::vector<std::pair<std::uint32_t, double>> entries;

  double Norm() const;
};

double Dot(const SparseVector& a, const SparseVector& b);
// Zero when either vector is zero.
double Cosine(const SparseVector& a, const SparseVector& b);

// tf * (ln((N + 1) / (df + 1)) + 1) over the given sentence collection.
// Term ids follow lexicographic term order.
std::vector<SparseVector> TfidfVectors(
    const std::vector<std::vector<std::string>>& sentence_terms);

}  // namespace summgauge

#endif  // SUMMGAUGE_TEXTPROC_H_
