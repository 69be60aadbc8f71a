// Copyright 2026 The semtok Authors.
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

#ifndef SEMTOK_STEMMER_H_
#define SEMTOK_STEMMER_H_

#include <optional>
#include <string>
#include <string_view>

namespace semtok {

inline constexpr int kDefaultMinStemLength = 2;

// English Snowball (Porter 2) stem of a lowercase word. Words shorter than
// three characters and words without letters are returned unchanged.
std::string stem(std::string_view word);

// A word cut into a stem and the remaining suffix: stem + suffix == word.
struct StemSplit {
  std::string stem;
  std::string suffix;

  bool operator==(const StemSplit&) const = default;
};

// Splits `word` when its Porter 2 stem is a strict character prefix of at
// least `min_stem_length` code points. Stems that rewrite letters (for
// example "happy" -> "happi") make the word unstemmable.
std::optional<StemSplit> split_stem_suffix(std::string_view word,
                                           int min_stem_length = kDefaultMinStemLength);

}  // namespace semtok

#endif  // SEMTOK_STEMMER_H_
