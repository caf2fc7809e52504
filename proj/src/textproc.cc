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

#include "summgauge/textproc.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <numeric>
#include <sstream>

#include "summgauge/error.h"
#include "summgauge/porter_stemmer.h"
#include "summgauge_resources.inc"

namespace summgauge {
namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Decodes one UTF-8 code point starting at text[pos]; advances pos.
// Malformed sequences decode to U+FFFD one byte at a time.
char32_t DecodeUtf8(std::string_view text, std::size_t& pos) {
  const auto lead = static_cast<unsigned char>(text[pos]);
  if (lead < 0x80) {
    ++pos;
    return lead;
  }
  int extra = 0;
  char32_t cp = 0;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    ++pos;
    return kReplacement;
  }
  if (pos + extra >= text.size()) {
    ++pos;
    return kReplacement;
  }
  for (int i = 1; i <= extra; ++i) {
    const auto c = static_cast<unsigned char>(text[pos + i]);
    if ((c & 0xC0) != 0x80) {
      ++pos;
      return kReplacement;
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  pos += extra + 1;
  return cp;
}

void AppendUtf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool InRange(char32_t cp, char32_t lo, char32_t hi) {
  return cp >= lo && cp <= hi;
}

// Letters and digits. Non-ASCII code points count as word characters
// unless they fall in a punctuation, symbol or emoji block.
bool IsWordChar(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') ||
           (cp >= '0' && cp <= '9');
  }
  if (cp == kReplacement) return false;
  if (InRange(cp, 0x80, 0xBF) || cp == 0xD7 || cp == 0xF7) return false;
  if (InRange(cp, 0x2000, 0x2BFF)) return false;
  if (InRange(cp, 0x3000, 0x303F)) return false;
  if (InRange(cp, 0xFE30, 0xFE4F)) return false;
  if (InRange(cp, 0xFF00, 0xFF0F) || InRange(cp, 0xFF1A, 0xFF20) ||
      InRange(cp, 0xFF3B, 0xFF40) || InRange(cp, 0xFF5B, 0xFF65)) {
    return false;
  }
  if (InRange(cp, 0xFFF0, 0xFFFF)) return false;
  if (InRange(cp, 0x1F000, 0x1FAFF)) return false;
  return true;
}

bool IsJoiner(char32_t cp) { return cp == '\'' || cp == 0x2019 || cp == '-'; }

char32_t ToLower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 32;
  if (InRange(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 32;
  if (InRange(cp, 0x391, 0x3A9) && cp != 0x3A2) return cp + 32;
  if (InRange(cp, 0x410, 0x42F)) return cp + 32;
  if (InRange(cp, 0x400, 0x40F)) return cp + 80;
  return cp;
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsTerminator(char c) { return c == '.' || c == '!' || c == '?'; }

bool IsCloser(std::string_view text, std::size_t pos, std::size_t* width) {
  const char c = text[pos];
  if (c == '"' || c == '\'' || c == ')' || c == ']') {
    *width = 1;
    return true;
  }
  // U+2019 and U+201D (right quotes), U+00BB (right guillemet).
  if (text.substr(pos, 3) == "\xE2\x80\x99" ||
      text.substr(pos, 3) == "\xE2\x80\x9D") {
    *width = 3;
    return true;
  }
  if (text.substr(pos, 2) == "\xC2\xBB") {
    *width = 2;
    return true;
  }
  return false;
}

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
  }
  return out;
}

std::vector<std::string> ResourceLines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && IsSpace(line.back())) line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && IsSpace(line[start])) ++start;
    line.erase(0, start);
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

Lexicon LoadDefaultLexicon() {
  if (const char* path = std::getenv("SUMMGAUGE_STOPWORDS");
      path != nullptr && *path != '\0') {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorKind::kIoError,
                  std::string("cannot read SUMMGAUGE_STOPWORDS file ") + path);
    }
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return Lexicon::FromText(text, kAbbreviationsResource);
  }
  return Lexicon::FromText(kStopwordsResource, kAbbreviationsResource);
}

// Words in the preceding run of non-space characters, with leading
// brackets and quotes removed, e.g. "(U.S." -> "u.s".
std::string WordBeforePeriod(std::string_view text, std::size_t period) {
  std::size_t start = period;
  while (start > 0 && !IsSpace(text[start - 1])) --start;
  std::string_view word = text.substr(start, period - start);
  while (!word.empty() &&
         (word.front() == '(' || word.front() == '"' || word.front() == '[' ||
          word.front() == '\'')) {
    word.remove_prefix(1);
  }
  return std::string(word);
}

bool IsUpperAscii(char c) { return c >= 'A' && c <= 'Z'; }
bool IsLowerAscii(char c) { return c >= 'a' && c <= 'z'; }

// Decides whether a terminator run [run_begin, run_end) followed by
// whitespace and then `next` ends a sentence.
bool EndsSentence(std::string_view text, std::size_t run_begin,
                  std::size_t run_end, char next, const Lexicon& lexicon) {
  if (IsLowerAscii(next)) return false;
  if (run_end - run_begin != 1 || text[run_begin] != '.') return true;
  const std::string word = WordBeforePeriod(text, run_begin);
  if (word.size() == 1 && IsUpperAscii(word[0])) return false;  // initial
  const auto prefix = lexicon.AbbreviationIsPrefix(AsciiLower(word));
  if (!prefix.has_value()) return true;
  if (*prefix) return false;
  return IsUpperAscii(next);
}

struct Span {
  std::size_t begin;
  std::size_t end;
};

std::vector<Span> RawSentenceSpans(std::string_view text,
                                   const Lexicon& lexicon) {
  std::vector<Span> spans;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    std::size_t b = start;
    std::size_t e = end;
    while (b < e && IsSpace(text[b])) ++b;
    while (e > b && IsSpace(text[e - 1])) --e;
    if (b < e) spans.push_back({b, e});
    start = end;
  };
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      // A blank line separates paragraphs.
      std::size_t j = i + 1;
      while (j < text.size() && (text[j] == ' ' || text[j] == '\t' ||
                                 text[j] == '\r')) {
        ++j;
      }
      if (j < text.size() && text[j] == '\n') {
        emit(i);
        i = j + 1;
        continue;
      }
      ++i;
      continue;
    }
    if (!IsTerminator(c)) {
      ++i;
      continue;
    }
    const std::size_t run_begin = i;
    while (i < text.size() && IsTerminator(text[i])) ++i;
    const std::size_t run_end = i;
    std::size_t width = 0;
    while (i < text.size() && IsCloser(text, i, &width)) i += width;
    if (i >= text.size()) break;
    if (!IsSpace(text[i])) continue;
    std::size_t k = i;
    while (k < text.size() && IsSpace(text[k])) ++k;
    if (k >= text.size()) break;
    if (EndsSentence(text, run_begin, run_end, text[k], lexicon)) emit(i);
  }
  emit(text.size());
  return spans;
}

std::vector<std::string> TokenTexts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.text);
  return out;
}

bool IsConjunction(std::string_view lowered) {
  return lowered == "and" || lowered == "but" || lowered == "or" ||
         lowered == "while" || lowered == "whereas";
}

bool IsClauseBreak(char c) {
  return c == '.' || c == ';' || c == ':' || c == ',';
}

// Sorted-id form of a unit set, for fast Jaccard over many candidates.
std::vector<int> InternSet(const std::set<std::string>& units,
                           std::map<std::string, int>& ids) {
  std::vector<int> out;
  out.reserve(units.size());
  for (const auto& u : units) {
    auto [it, inserted] = ids.try_emplace(u, static_cast<int>(ids.size()));
    out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double JaccardSorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t common = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++common;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  const std::size_t uni = a.size() + b.size() - common;
  return uni == 0 ? 0.0 : static_cast<double>(common) / uni;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t Find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    // The smaller index stays root so roots are the earliest members.
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

void TextConfig::Validate() const {
  if (ngram_orders.empty()) {
    throw Error(ErrorKind::kInvalidConfig, "ngram_orders is empty");
  }
  for (int n : ngram_orders) {
    if (n < 1 || n > 4) {
      throw Error(ErrorKind::kInvalidConfig,
                  "ngram order " + std::to_string(n) + " outside [1, 4]");
    }
  }
  if (!(smoothing_alpha >= 0.0) || !std::isfinite(smoothing_alpha)) {
    throw Error(ErrorKind::kInvalidConfig, "smoothing_alpha must be >= 0");
  }
}

double LogIn(LogBase base, double x) {
  return base == LogBase::kTwo ? std::log2(x) : std::log(x);
}

const Lexicon& Lexicon::Default() {
  static const Lexicon lexicon = LoadDefaultLexicon();
  return lexicon;
}

Lexicon Lexicon::FromText(std::string_view stopwords,
                          std::string_view abbreviations) {
  Lexicon lexicon;
  for (const std::string& line : ResourceLines(stopwords)) {
    lexicon.stopwords_.insert(AsciiLower(line));
  }
  for (const std::string& line : ResourceLines(abbreviations)) {
    std::istringstream fields(line);
    std::string abbreviation;
    std::string marker;
    fields >> abbreviation >> marker;
    lexicon.abbreviations_[AsciiLower(abbreviation)] = marker == "prefix";
  }
  return lexicon;
}

bool Lexicon::IsStopword(std::string_view lowered) const {
  return stopwords_.count(std::string(lowered)) > 0;
}

std::string Lexicon::StopwordFingerprint() const {
  std::vector<std::string> sorted(stopwords_.begin(), stopwords_.end());
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (const std::string& word : sorted) {
    for (char c : word + "\n") {
      hash ^= static_cast<unsigned char>(c);
      hash *= 0x100000001B3ULL;
    }
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = kHex[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

std::optional<bool> Lexicon::AbbreviationIsPrefix(
    std::string_view lowered) const {
  auto it = abbreviations_.find(std::string(lowered));
  if (it == abbreviations_.end()) return std::nullopt;
  return it->second;
}

std::vector<Token> Tokenize(std::string_view text, bool lowercase) {
  std::vector<Token> tokens;
  Token current;
  bool in_token = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t cp_begin = pos;
    const char32_t cp = DecodeUtf8(text, pos);
    if (IsWordChar(cp)) {
      if (!in_token) {
        current = Token{};
        current.begin = cp_begin;
        in_token = true;
      }
      AppendUtf8(lowercase ? ToLower(cp) : cp, current.text);
      current.end = pos;
      continue;
    }
    if (in_token && IsJoiner(cp) && pos < text.size()) {
      std::size_t look = pos;
      const char32_t next = DecodeUtf8(text, look);
      if (IsWordChar(next)) {
        current.text.push_back(cp == '-' ? '-' : '\'');
        continue;
      }
    }
    if (in_token) {
      tokens.push_back(std::move(current));
      in_token = false;
    }
  }
  if (in_token) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<Sentence> SegmentSentences(std::string_view text,
                                       const TextConfig& config) {
  const std::vector<Span> spans = RawSentenceSpans(text, Lexicon::Default());
  std::vector<Sentence> sentences;
  std::optional<std::size_t> pending_begin;
  for (const Span& span : spans) {
    std::vector<Token> tokens =
        Tokenize(text.substr(span.begin, span.end - span.begin),
                 config.lowercase);
    if (tokens.empty()) {
      if (!sentences.empty()) {
        sentences.back().end = span.end;
      } else if (!pending_begin) {
        pending_begin = span.begin;
      }
      continue;
    }
    Sentence s;
    s.index = sentences.size();
    s.tokens = TokenTexts(tokens);
    s.begin = pending_begin.value_or(span.begin);
    s.end = span.end;
    pending_begin.reset();
    sentences.push_back(std::move(s));
  }
  return sentences;
}

std::vector<std::string> NgramTerms(const std::vector<std::string>& tokens,
                                    const TextConfig& config) {
  const Lexicon& lexicon = Lexicon::Default();
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) {
    if (config.ngram_stopwords == StopwordPolicy::kDrop &&
        lexicon.IsStopword(config.lowercase ? t : AsciiLower(t))) {
      continue;
    }
    out.push_back(config.stem ? PorterStem(t) : t);
  }
  return out;
}

std::vector<std::string> NgramTerms(std::string_view text,
                                    const TextConfig& config) {
  return NgramTerms(TokenTexts(Tokenize(text, config.lowercase)), config);
}

std::vector<std::string> UnitTerms(const std::vector<std::string>& tokens,
                                   const TextConfig& config) {
  const Lexicon& lexicon = Lexicon::Default();
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) {
    const std::string lowered = config.lowercase ? t : AsciiLower(t);
    if (config.unit_stopwords == StopwordPolicy::kDrop &&
        lexicon.IsStopword(lowered)) {
      continue;
    }
    out.push_back(config.stem_units ? PorterStem(lowered) : lowered);
  }
  return out;
}

std::vector<std::string> UnitTerms(std::string_view text,
                                   const TextConfig& config) {
  return UnitTerms(TokenTexts(Tokenize(text, config.lowercase)), config);
}

NgramCounts CountNgrams(const std::vector<std::string>& terms, int n) {
  NgramCounts counts;
  if (n < 1 || terms.size() < static_cast<std::size_t>(n)) return counts;
  for (std::size_t i = 0; i + n <= terms.size(); ++i) {
    std::string gram = terms[i];
    for (int k = 1; k < n; ++k) {
      gram.push_back(' ');
      gram += terms[i + k];
    }
    ++counts[gram];
  }
  return counts;
}

std::set<std::string> NgramSet(const std::vector<std::string>& terms, int n) {
  std::set<std::string> out;
  for (const auto& [gram, count] : CountNgrams(terms, n)) out.insert(gram);
  return out;
}

int TotalCount(const NgramCounts& counts) {
  int total = 0;
  for (const auto& [gram, count] : counts) total += count;
  return total;
}

UnitDistribution::UnitDistribution(std::map<std::string, double> probabilities,
                                   double smoothing_alpha)
    : probabilities_(std::move(probabilities)),
      smoothing_alpha_(smoothing_alpha) {}

double UnitDistribution::Probability(const std::string& unit) const {
  auto it = probabilities_.find(unit);
  return it == probabilities_.end() ? 0.0 : it->second;
}

bool UnitDistribution::SameVocabulary(const UnitDistribution& other) const {
  if (probabilities_.size() != other.probabilities_.size()) return false;
  return std::equal(
      probabilities_.begin(), probabilities_.end(),
      other.probabilities_.begin(),
      [](const auto& a, const auto& b) { return a.first == b.first; });
}

UnitCounts CountUnits(const std::vector<std::string>& texts,
                      const TextConfig& config) {
  UnitCounts counts;
  for (const std::string& text : texts) {
    for (std::string& unit : UnitTerms(text, config)) ++counts[std::move(unit)];
  }
  return counts;
}

UnitDistribution BuildDistribution(const UnitCounts& counts,
                                   const std::set<std::string>& vocabulary,
                                   double alpha) {
  long long total = 0;
  for (const auto& [unit, count] : counts) {
    if (vocabulary.count(unit) == 0) {
      throw Error(ErrorKind::kVocabularyMismatch,
                  "unit '" + unit + "' missing from vocabulary");
    }
    total += count;
  }
  if (total == 0) {
    throw Error(ErrorKind::kEmptyAfterFiltering,
                "text has no semantic units after filtering");
  }
  const double denominator =
      static_cast<double>(total) + alpha * static_cast<double>(vocabulary.size());
  std::map<std::string, double> probabilities;
  for (const std::string& unit : vocabulary) {
    auto it = counts.find(unit);
    const double count = it == counts.end() ? 0.0 : it->second;
    probabilities.emplace(unit, (count + alpha) / denominator);
  }
  return UnitDistribution(std::move(probabilities), alpha);
}

UnitDistribution BuildDistribution(const std::vector<std::string>& texts,
                                   const TextConfig& config,
                                   const std::set<std::string>& vocabulary) {
  return BuildDistribution(CountUnits(texts, config), vocabulary,
                           config.smoothing_alpha);
}

UnitDistribution BuildDistribution(const std::vector<std::string>& texts,
                                   const TextConfig& config) {
  const UnitCounts counts = CountUnits(texts, config);
  std::set<std::string> vocabulary;
  for (const auto& [unit, count] : counts) vocabulary.insert(unit);
  return BuildDistribution(counts, vocabulary, 0.0);
}

std::set<std::string> UnionVocabulary(const UnitCounts& a,
                                      const UnitCounts& b) {
  std::set<std::string> vocabulary;
  for (const auto& [unit, count] : a) vocabulary.insert(unit);
  for (const auto& [unit, count] : b) vocabulary.insert(unit);
  return vocabulary;
}

double Jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t common = 0;
  for (const auto& u : a) common += b.count(u);
  return static_cast<double>(common) /
         static_cast<double>(a.size() + b.size() - common);
}

std::vector<Clause> ExtractClauses(std::string_view text,
                                   const TextConfig& config) {
  std::vector<Clause> clauses;
  std::vector<std::string> clause_tokens;
  std::size_t clause_begin = 0;
  std::size_t clause_end = 0;
  auto flush = [&]() {
    if (!clause_tokens.empty()) {
      std::vector<std::string> units = UnitTerms(clause_tokens, config);
      std::set<std::string> unit_set(units.begin(), units.end());
      if (unit_set.size() >= 3) {
        clauses.push_back({std::move(unit_set), clause_begin, clause_end});
      }
    }
    clause_tokens.clear();
  };
  for (const Sentence& sentence : SegmentSentences(text, config)) {
    const std::string_view sentence_text = sentence.Text(text);
    const std::vector<Token> tokens =
        Tokenize(sentence_text, config.lowercase);
    std::size_t previous_end = 0;
    for (const Token& token : tokens) {
      const std::string_view gap =
          sentence_text.substr(previous_end, token.begin - previous_end);
      if (std::any_of(gap.begin(), gap.end(), IsClauseBreak)) flush();
      previous_end = token.end;
      if (IsConjunction(AsciiLower(token.text))) {
        flush();
        continue;
      }
      if (clause_tokens.empty()) clause_begin = sentence.begin + token.begin;
      clause_end = sentence.begin + token.end;
      clause_tokens.push_back(token.text);
    }
    flush();
  }
  return clauses;
}

std::optional<std::size_t> Pyramid::BestMatch(
    const std::set<std::string>& units, double threshold) const {
  std::optional<std::size_t> best;
  double best_score = -1.0;
  for (std::size_t i = 0; i < scus.size(); ++i) {
    for (const auto& member : scus[i].members) {
      const double score = Jaccard(units, member);
      if (score >= threshold && score > best_score) {
        best_score = score;
        best = i;
      }
    }
  }
  return best;
}

Pyramid ExtractScus(const std::vector<std::string>& documents,
                    const TextConfig& config, double jaccard_threshold) {
  if (!(jaccard_threshold > 0.0 && jaccard_threshold <= 1.0)) {
    throw Error(ErrorKind::kInvalidConfig,
                "jaccard_threshold must lie in (0, 1]");
  }
  struct Candidate {
    std::size_t doc;
    Clause clause;
    std::vector<int> ids;
  };
  std::vector<Candidate> candidates;
  std::map<std::string, int> unit_ids;
  for (std::size_t d = 0; d < documents.size(); ++d) {
    for (Clause& clause : ExtractClauses(documents[d], config)) {
      std::vector<int> ids = InternSet(clause.units, unit_ids);
      candidates.push_back({d, std::move(clause), std::move(ids)});
    }
  }
  if (candidates.empty()) {
    throw Error(ErrorKind::kNoScus,
                "no clause has three or more content words");
  }

  DisjointSets groups(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (JaccardSorted(candidates[i].ids, candidates[j].ids) >=
          jaccard_threshold) {
        groups.Union(i, j);
      }
    }
  }

  std::map<std::size_t, std::size_t> root_to_scu;
  std::vector<Scu> scus;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::size_t root = groups.Find(i);
    auto [it, inserted] = root_to_scu.try_emplace(root, scus.size());
    if (inserted) {
      Scu scu;
      scu.id = static_cast<int>(scus.size());
      scu.units = candidates[i].clause.units;
      scu.doc_index = candidates[i].doc;
      scu.begin = candidates[i].clause.begin;
      scu.end = candidates[i].clause.end;
      scus.push_back(std::move(scu));
    }
    Scu& scu = scus[it->second];
    scu.documents.insert(candidates[i].doc);
    scu.members.push_back(candidates[i].clause.units);
  }
  for (Scu& scu : scus) scu.weight = static_cast<int>(scu.documents.size());
  std::stable_sort(scus.begin(), scus.end(), [](const Scu& a, const Scu& b) {
    return a.weight != b.weight ? a.weight > b.weight : a.id < b.id;
  });

  Pyramid pyramid;
  pyramid.scus = std::move(scus);
  for (std::size_t i = 0; i < pyramid.scus.size(); ++i) {
    const int weight = pyramid.scus[i].weight;
    if (pyramid.tiers.empty() || pyramid.tiers.back().weight != weight) {
      pyramid.tiers.push_back({weight, {}});
    }
    pyramid.tiers.back().scus.push_back(i);
  }
  return pyramid;
}

double SparseVector::Norm() const {
  double sum = 0.0;
  for (const auto& [id, w] : entries) sum += w * w;
  return std::sqrt(sum);
}

double Dot(const SparseVector& a, const SparseVector& b) {
  double sum = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.entries.size() && j < b.entries.size()) {
    if (a.entries[i].first == b.entries[j].first) {
      sum += a.entries[i].second * b.entries[j].second;
      ++i;
      ++j;
    } else if (a.entries[i].first < b.entries[j].first) {
      ++i;
    } else {
      ++j;
    }
  }
  return sum;
}

double Cosine(const SparseVector& a, const SparseVector& b) {
  const double na = a.Norm();
  const double nb = b.Norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(Dot(a, b) / (na * nb), -1.0, 1.0);
}

std::vector<SparseVector> TfidfVectors(
    const std::vector<std::vector<std::string>>& sentence_terms) {
  std::map<std::string, int> document_frequency;
  for (const auto& terms : sentence_terms) {
    std::set<std::string> seen(terms.begin(), terms.end());
    for (const auto& t : seen) ++document_frequency[t];
  }
  std::map<std::string, std::uint32_t> ids;
  std::vector<double> idf;
  const double n = static_cast<double>(sentence_terms.size());
  for (const auto& [term, df] : document_frequency) {
    ids.emplace(term, static_cast<std::uint32_t>(idf.size()));
    idf.push_back(std::log((n + 1.0) / (df + 1.0)) + 1.0);
  }
  std::vector<SparseVector> vectors;
  vectors.reserve(sentence_terms.size());
  for (const auto& terms : sentence_terms) {
    std::map<std::uint32_t, int> tf;
    for (const auto& t : terms) ++tf[ids.at(t)];
    SparseVector v;
    v.entries.reserve(tf.size());
    for (const auto& [id, count] : tf) v.entries.emplace_back(id, count * idf[id]);
    vectors.push_back(std::move(v));
  }
  return vectors;
}

}  // namespace summgauge
