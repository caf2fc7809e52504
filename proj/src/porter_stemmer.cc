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

#include "summgauge/porter_stemmer.h"

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <utility>

namespace summgauge {
namespace {

class Stemmer {
 public:
  explicit Stemmer(std::string_view word) : w_(word) {}

  std::string Run() {
    Step1a();
    Step1b();
    Step1c();
    Step2();
    Step3();
    Step4();
    Step5a();
    Step5b();
    return std::move(w_);
  }

 private:
  bool IsConsonant(std::size_t i) const {
    switch (w_[i]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 || !IsConsonant(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in w_[0, len).
  int Measure(std::size_t len) const {
    int m = 0;
    std::size_t i = 0;
    while (i < len && IsConsonant(i)) ++i;
    while (i < len) {
      while (i < len && !IsConsonant(i)) ++i;
      if (i >= len) break;
      while (i < len && IsConsonant(i)) ++i;
      ++m;
    }
    return m;
  }

  bool HasVowel(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i) {
      if (!IsConsonant(i)) return true;
    }
    return false;
  }

  bool EndsDoubleConsonant(std::size_t len) const {
    return len >= 2 && w_[len - 1] == w_[len - 2] && IsConsonant(len - 1);
  }

  // *o: stem ends consonant-vowel-consonant, last not w, x or y.
  bool EndsCvc(std::size_t len) const {
    if (len < 3) return false;
    if (!IsConsonant(len - 3) || IsConsonant(len - 2) || !IsConsonant(len - 1))
      return false;
    const char c = w_[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool EndsWith(std::string_view suffix) const {
    return w_.size() >= suffix.size() &&
           std::string_view(w_).substr(w_.size() - suffix.size()) == suffix;
  }

  std::size_t StemLen(std::string_view suffix) const {
    return w_.size() - suffix.size();
  }

  void Replace(std::string_view suffix, std::string_view with) {
    w_.replace(StemLen(suffix), suffix.size(), with);
  }

  void Step1a() {
    if (EndsWith("sses")) {
      Replace("sses", "ss");
    } else if (EndsWith("ies")) {
      Replace("ies", "i");
    } else if (EndsWith("ss")) {
      // unchanged
    } else if (EndsWith("s")) {
      w_.pop_back();
    }
  }

  void Step1b() {
    if (EndsWith("eed")) {
      if (Measure(StemLen("eed")) > 0) w_.pop_back();
      return;
    }
    bool stripped = false;
    if (EndsWith("ed") && HasVowel(StemLen("ed"))) {
      w_.resize(StemLen("ed"));
      stripped = true;
    } else if (EndsWith("ing") && HasVowel(StemLen("ing"))) {
      w_.resize(StemLen("ing"));
      stripped = true;
    }
    if (!stripped) return;
    if (EndsWith("at") || EndsWith("bl") || EndsWith("iz")) {
      w_.push_back('e');
    } else if (EndsDoubleConsonant(w_.size())) {
      const char c = w_.back();
      if (c != 'l' && c != 's' && c != 'z') w_.pop_back();
    } else if (Measure(w_.size()) == 1 && EndsCvc(w_.size())) {
      w_.push_back('e');
    }
  }

  void Step1c() {
    if (EndsWith("y") && HasVowel(StemLen("y"))) w_.back() = 'i';
  }

  void Step2() {
    static constexpr std::array<std::pair<std::string_view, std::string_view>,
                                20>
        kRules = {{{"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
                   {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
                   {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
                   {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
                   {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
                   {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
                   {"iviti", "ive"},   {"biliti", "ble"}}};
    // Several suffixes overlap ("ational"/"ation"); the longest match wins.
    ApplyLongest(kRules, 0);
  }

  void Step3() {
    static constexpr std::array<std::pair<std::string_view, std::string_view>,
                                7>
        kRules = {{{"icate", "ic"},
                   {"ative", ""},
                   {"alize", "al"},
                   {"iciti", "ic"},
                   {"ical", "ic"},
                   {"ful", ""},
                   {"ness", ""}}};
    ApplyLongest(kRules, 0);
  }

  void Step4() {
    static constexpr std::array<std::string_view, 19> kSuffixes = {
        "al",  "ance", "ence", "er",  "ic",  "able", "ible",
        "ant", "ement", "ment", "ent", "ion", "ou",   "ism",
        "ate", "iti",  "ous",  "ive", "ize"};
    std::string_view best;
    for (std::string_view s : kSuffixes) {
      if (EndsWith(s) && s.size() > best.size()) best = s;
    }
    if (best.empty()) return;
    const std::size_t len = StemLen(best);
    if (Measure(len) <= 1) return;
    if (best == "ion" && (len == 0 || (w_[len - 1] != 's' && w_[len - 1] != 't')))
      return;
    w_.resize(len);
  }

  void Step5a() {
    if (!EndsWith("e")) return;
    const std::size_t len = w_.size() - 1;
    const int m = Measure(len);
    if (m > 1 || (m == 1 && !EndsCvc(len))) w_.pop_back();
  }

  void Step5b() {
    if (Measure(w_.size()) > 1 && EndsDoubleConsonant(w_.size()) &&
        w_.back() == 'l') {
      w_.pop_back();
    }
  }

  template <std::size_t N>
  void ApplyLongest(
      const std::array<std::pair<std::string_view, std::string_view>, N>&
          rules,
      int min_measure) {
    const std::pair<std::string_view, std::string_view>* best = nullptr;
    for (const auto& rule : rules) {
      if (EndsWith(rule.first) &&
          (best == nullptr || rule.first.size() > best->first.size())) {
        best = &rule;
      }
    }
    if (best != nullptr && Measure(StemLen(best->first)) > min_measure) {
      Replace(best->first, best->second);
    }
  }

  std::string w_;
};

}  // namespace

std::string PorterStem(std::string_view word) {
  if (word.size() <= 2) return std::string(word);
  const bool plain = std::all_of(word.begin(), word.end(),
                                 [](char c) { return c >= 'a' && c <= 'z'; });
  if (!plain) return std::string(word);
  return Stemmer(word).Run();
}

}  // namespace summgauge
