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

#include "semtok/codec.h"

#include <stdexcept>

#include "semtok/error.h"
#include "utf8.h"

namespace semtok {

bool segment_word(std::string_view word, const Vocabulary& vocab, int max_word_chars,
                  std::vector<std::int32_t>& ids) {
  if (word.empty()) return false;
  const bool ascii = utf8::is_ascii(word);
  const std::size_t chars = ascii ? word.size() : utf8::length(word);
  if (chars > static_cast<std::size_t>(max_word_chars)) return false;

  thread_local std::vector<std::uint32_t> bounds;
  if (!ascii) utf8::boundaries(word, bounds);
  // Byte offset of code point k.
  auto boundary_at = [&](std::size_t k) -> std::size_t { return ascii ? k : bounds[k]; };

  const std::size_t initial_size = ids.size();
  const std::size_t max_bytes = vocab.max_payload_bytes();
  std::size_t start = 0;  // code point index
  bool first = true;
  while (start < chars) {
    const std::size_t start_byte = boundary_at(start);
    // Largest end (in code points) whose byte span fits the longest token.
    std::size_t end = chars;
    while (end > start && boundary_at(end) - start_byte > max_bytes) --end;
    bool matched = false;
    for (; end > start; --end) {
      const std::string_view piece =
          word.substr(start_byte, boundary_at(end) - start_byte);
      const auto id = first ? vocab.find_initial(piece) : vocab.find_continuation(piece);
      if (id) {
        ids.push_back(*id);
        matched = true;
        break;
      }
    }
    if (!matched) {
      ids.resize(initial_size);
      return false;
    }
    start = end;
    first = false;
  }
  return true;
}

std::vector<std::string> encode_word(std::string_view word, const Vocabulary& vocab,
                                     int max_word_chars) {
  std::vector<std::int32_t> ids;
  if (!segment_word(word, vocab, max_word_chars, ids)) return {std::string(kUnkToken)};
  std::vector<std::string> pieces;
  pieces.reserve(ids.size());
  for (auto id : ids) pieces.push_back(vocab.at(id).token);
  return pieces;
}

Encoding encode_text(std::string_view text, const Vocabulary& vocab,
                     const NormalizationConfig& norm, int max_word_chars) {
  Encoding out;
  const std::string normalized = normalize_text(text, norm);
  for_each_word(normalized, [&](std::string_view word) {
    if (segment_word(word, vocab, max_word_chars, out.ids)) return;
    const auto unk = vocab.unk_id();
    if (!unk) throw Error("vocabulary has no [UNK] token; cannot encode '" +
                          std::string(word) + "'");
    out.unk_positions.push_back(out.ids.size());
    out.ids.push_back(*unk);
  });
  out.pieces.reserve(out.ids.size());
  for (auto id : out.ids) out.pieces.push_back(vocab.at(id).token);
  return out;
}

std::string decode(std::span<const std::int32_t> ids, const Vocabulary& vocab) {
  std::string out;
  bool first = true;
  for (auto id : ids) {
    const VocabEntry& e = vocab.at(id);
    if (e.kind == TokenKind::kContinuation) {
      out += token_payload(e.token);
    } else {
      if (!first) out += ' ';
      out += e.token;
    }
    first = false;
  }
  return out;
}

std::vector<std::int32_t> pieces_to_ids(std::span<const std::string> pieces,
                                        const Vocabulary& vocab) {
  std::vector<std::int32_t> ids;
  ids.reserve(pieces.size());
  for (const auto& p : pieces) {
    const auto id = vocab.lookup(p);
    if (!id) throw std::out_of_range("unknown piece: " + p);
    ids.push_back(*id);
  }
  return ids;
}

}  // namespace semtok
