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

#ifndef SEMTOK_CORPUS_H_
#define SEMTOK_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace semtok {

enum class UnicodeForm { kNFC, kNFKC };

struct NormalizationConfig {
  bool lowercase = true;
  UnicodeForm unicode_form = UnicodeForm::kNFKC;
  // Replace control characters (general category Cc) with a space.
  bool strip_control = true;

  bool operator==(const NormalizationConfig&) const = default;
};

// Applies `config` to UTF-8 `text`. The result is a fixpoint:
// normalize_text(normalize_text(t)) == normalize_text(t).
// Throws DecodeError carrying the offset of the first invalid byte.
std::string normalize_text(std::string_view text,
                           const NormalizationConfig& config = {});

// Splits normalized text into words. Unicode whitespace separates words and
// every punctuation or symbol character (categories P*, S*) is a word of its
// own. Digits stay attached to the surrounding letters.
std::vector<std::string> split_words(std::string_view text);

// Calls `fn` for every word of `text` without materializing the list.
void for_each_word(std::string_view text,
                   const std::function<void(std::string_view)>& fn);

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

struct WordCount {
  std::string word;
  std::uint64_t count = 0;

  bool operator==(const WordCount&) const = default;
};

// Distinct normalized words of a corpus with their occurrence counts.
class WordFrequencyTable {
 public:
  using Map =
      std::unordered_map<std::string, std::uint64_t, StringHash, std::equal_to<>>;

  WordFrequencyTable() = default;

  // Adds `count` occurrences of `word`. Empty words, words containing
  // whitespace and zero counts are rejected with std::invalid_argument.
  void add(std::string_view word, std::uint64_t count = 1);

  // Adds every entry of `other`. Commutative and associative.
  void merge(const WordFrequencyTable& other);

  std::uint64_t count(std::string_view word) const;
  std::uint64_t total() const { return total_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Map& entries() const { return entries_; }

  // Descending count, ties broken by lexicographic (byte) order of the word.
  std::vector<WordCount> sorted_by_frequency() const;

  // "word<TAB>count" lines in sorted_by_frequency() order.
  void write_tsv(std::ostream& os) const;

  bool operator==(const WordFrequencyTable& other) const {
    return total_ == other.total_ && entries_ == other.entries_;
  }

 private:
  Map entries_;
  std::uint64_t total_ = 0;
};

// Counts words of a corpus stream, one document per line.
WordFrequencyTable build_frequency_table(std::istream& corpus,
                                         const NormalizationConfig& config = {});

// Counts words over files and directory trees (every regular file below a
// directory, visited in sorted path order). Lines are counted on up to
// `threads` shards; 0 means std::thread::hardware_concurrency(). The result
// does not depend on the shard layout.
WordFrequencyTable build_frequency_table(
    const std::vector<std::filesystem::path>& inputs,
    const NormalizationConfig& config = {}, unsigned threads = 0);

// Same as above over in-memory documents.
WordFrequencyTable build_frequency_table(const std::vector<std::string>& documents,
                                         const NormalizationConfig& config = {},
                                         unsigned threads = 0);

// Expands directories into their regular files (recursively, sorted).
std::vector<std::filesystem::path> expand_inputs(
    const std::vector<std::filesystem::path>& inputs);

// Reads every line of the given inputs in order. Throws IoError.
std::vector<std::string> read_lines(const std::vector<std::filesystem::path>& inputs);

}  // namespace semtok

#endif  // SEMTOK_CORPUS_H_
