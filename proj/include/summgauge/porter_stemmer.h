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

#ifndef SUMMGAUGE_PORTER_STEMMER_H_
#define SUMMGAUGE_PORTER_STEMMER_H_

#include <string>
#include <string_view>

namespace summgauge {

// The original 1980 Porter suffix-stripping algorithm. Input is expected in
// lowercase; words of length <= 2 and words containing non-ASCII-letter
// characters are returned unchanged.
std::string PorterStem(std::string_view word);

}  // namespace summgauge

#endif  // SUMMGAUGE_PORTER_STEMMER_H_
