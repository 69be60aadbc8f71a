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

#ifndef SEMTOK_CODEC_H_
#define SEMTOK_CODEC_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semtok/corpus.h"
#include "semtok/vocab.h"

namespace semtok {

// Words longer than this (in code points) encode as [UNK].
inline constexpr int kDefaultMaxWordChars = 100;

struct Encoding {
  std::vector<std::int32_t> ids;
  std::vector<std::string> pieces;
  std::vector<std::size_t> unk_positions;  // indices into ids/pieces

  bool operator==(const Encoding&) const = default;
};

// Greedy longest-match-first segmentation of one word: the longest initial
// token prefixing the word, then repeatedly the longest continuation token
// prefixing the remainder. Appends the ids to `ids` and returns true, or
// leaves `ids` untouched and returns false when the word cannot be covered
// (the caller emits [UNK]). Special tokens never match.
bool segment_word(std::string_view word, const Vocabulary& vocab, int max_word_chars,
                  std::vector<std::int32_t>& ids);

// Pieces for one word; a word that cannot be segmented is the single piece
// "[UNK]".
std::vector<std::string> encode_word(std::string_view word, const Vocabulary& vocab,
                                     int max_word_chars = kDefaultMaxWordChars);

// normalize_text, split_words, then encode_word per word. No [CLS]/[SEP]
// framing is added. Throws DecodeError for invalid UTF-8 and semtok::Error
// when a word needs [UNK] but the vocabulary has none.
Encoding encode_text(std::string_view text, const Vocabulary& vocab,
                     const NormalizationConfig& norm = {},
                     int max_word_chars = kDefaultMaxWordChars);

// Continuation pieces join the preceding word; initial pieces start a new
// space-separated word. Throws std::out_of_range for an unknown id.
std::string decode(std::span<const std::int32_t> ids, const Vocabulary& vocab);

// Maps piece strings to ids. Throws std::out_of_range naming an unknown piece.
std::vector<std::int32_t> pieces_to_ids(std::span<const std::string> pieces,
                                        const Vocabulary& vocab);

}  // namespace semtok

#endif  // SEMTOK_CODEC_H_
