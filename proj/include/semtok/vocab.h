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

#ifndef SEMTOK_VOCAB_H_
#define SEMTOK_VOCAB_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "semtok/corpus.h"

namespace semtok {

// Marks a token that continues a word ("##ing").
inline constexpr std::string_view kContinuationMarker = "##";
inline constexpr std::string_view kUnkToken = "[UNK]";

enum class TokenKind { kInitial, kContinuation };
enum class Segment { kSpecial, kSemantic, kResidual };

// [PAD], [UNK], [CLS], [SEP], [MASK].
std::vector<std::string> default_special_tokens();

bool is_continuation(std::string_view token);

// Token text without the continuation marker.
std::string_view token_payload(std::string_view token);

struct VocabEntry {
  std::string token;
  TokenKind kind = TokenKind::kInitial;
  Segment segment = Segment::kResidual;
  double score = 0.0;  // log relative frequency; 0 for specials
  std::int32_t id = 0;

  bool operator==(const VocabEntry&) const = default;
};

// A vocabulary candidate together with the corpus occurrences credited to it.
struct CandidateStats {
  std::string token;
  std::uint64_t occurrence_mass = 0;

  bool operator==(const CandidateStats&) const = default;
};

// Input row for Vocabulary::build.
struct TokenSpec {
  std::string token;
  Segment segment = Segment::kResidual;
  double score = 0.0;
};

// Scores are stored rounded to the 6 decimals the model file carries, so a
// vocabulary compares equal to its own serialized form.
double round_score(double score);

// Immutable token set: specials at the lowest ids, then the semantic and
// residual segments in the order given at construction.
class Vocabulary {
 public:
  Vocabulary() = default;

  // Validates and assigns dense ids. Throws std::invalid_argument on an
  // empty or duplicate token, a token containing TAB or newline, a bare
  // continuation marker, a special token listed after a regular one, or a
  // positive score on a regular token.
  static Vocabulary build(std::vector<TokenSpec> tokens);

  // Convenience: specials (score 0) followed by `tokens`.
  static Vocabulary build(std::span<const std::string> specials,
                          std::vector<TokenSpec> tokens);

  std::optional<std::int32_t> lookup(std::string_view token) const;

  // Throws std::out_of_range for an invalid id.
  const VocabEntry& at(std::int32_t id) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::span<const VocabEntry> entries() const { return entries_; }
  std::size_t num_specials() const { return num_specials_; }
  std::size_t num_semantic() const { return num_semantic_; }
  std::size_t num_residual() const { return size() - num_specials_ - num_semantic_; }

  // |semantic| / (|V| - |specials|), or 0 when there are no regular tokens.
  double semantic_fraction() const;

  std::optional<std::int32_t> unk_id() const { return unk_id_; }

  // Encoder lookups over regular (non-special) tokens, keyed by payload.
  std::optional<std::int32_t> find_initial(std::string_view payload) const {
    return find(initial_, payload);
  }
  std::optional<std::int32_t> find_continuation(std::string_view payload) const {
    return find(continuation_, payload);
  }
  // Longest payload among regular tokens, in bytes.
  std::size_t max_payload_bytes() const { return max_payload_bytes_; }

  bool operator==(const Vocabulary& other) const { return entries_ == other.entries_; }

 private:
  using Index = std::unordered_map<std::string, std::int32_t, StringHash, std::equal_to<>>;

  static std::optional<std::int32_t> find(const Index& index, std::string_view key) {
    auto it = index.find(key);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  std::vector<VocabEntry> entries_;
  Index index_;
  Index initial_;
  Index continuation_;
  std::size_t num_specials_ = 0;
  std::size_t num_semantic_ = 0;
  std::size_t max_payload_bytes_ = 0;
  std::optional<std::int32_t> unk_id_;
};

// Model file:
//   #semtok<TAB>1
//   #f<TAB><realized semantic fraction, 6 decimals>
//   <token><TAB><score, 6 decimals><TAB><I|C><TAB><S|M|R>   (one per id)
std::string serialize_model(const Vocabulary& vocab);
void serialize_model(const Vocabulary& vocab, std::ostream& os);

// Throws ModelParseError naming the offending line.
Vocabulary deserialize_model(std::string_view bytes);
Vocabulary deserialize_model(std::istream& is);

// BERT vocab.txt: one token per line in id order.
std::string export_bert_vocab(const Vocabulary& vocab);

void save_model(const Vocabulary& vocab, const std::filesystem::path& path);
Vocabulary load_model(const std::filesystem::path& path);
void save_bert_vocab(const Vocabulary& vocab, const std::filesystem::path& path);

}  // namespace semtok

#endif  // SEMTOK_VOCAB_H_
