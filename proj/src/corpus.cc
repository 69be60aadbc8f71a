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

#include "semtok/corpus.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <future>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "semtok/error.h"
#include "utf8.h"

namespace semtok {

DecodeError::DecodeError(std::size_t byte_offset, const std::string& context)
    : Error((context.empty() ? std::string() : context + ": ") +
            "invalid UTF-8 at byte offset " + std::to_string(byte_offset)),
      byte_offset_(byte_offset) {}

IoError::IoError(const std::string& path, const std::string& message)
    : Error(path + ": " + message), path_(path) {}

namespace {

enum class CharClass : std::uint8_t { kWord, kSpace, kPunct };

CharClass classify_slow(char32_t c) {
  const auto cp = static_cast<UChar32>(c);
  if (u_isUWhiteSpace(cp)) return CharClass::kSpace;
  if (U_GET_GC_MASK(cp) & (U_GC_P_MASK | U_GC_S_MASK)) return CharClass::kPunct;
  return CharClass::kWord;
}

const std::array<CharClass, 128>& ascii_classes() {
  static const std::array<CharClass, 128> table = [] {
    std::array<CharClass, 128> t{};
    for (char32_t c = 0; c < 128; ++c) t[c] = classify_slow(c);
    return t;
  }();
  return table;
}

inline CharClass classify(char32_t c) {
  return c < 128 ? ascii_classes()[c] : classify_slow(c);
}

std::string normalize_ascii(std::string_view text, const NormalizationConfig& config) {
  std::string out(text);
  for (char& ch : out) {
    const auto c = static_cast<unsigned char>(ch);
    if (config.strip_control && (c < 0x20 || c == 0x7F)) {
      ch = ' ';
    } else if (config.lowercase && c >= 'A' && c <= 'Z') {
      ch = static_cast<char>(c - 'A' + 'a');
    }
  }
  return out;
}

const icu::Normalizer2& normalizer_for(UnicodeForm form) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = form == UnicodeForm::kNFKC
                                  ? icu::Normalizer2::getNFKCInstance(status)
                                  : icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || n == nullptr)
    throw Error(std::string("ICU normalizer unavailable: ") + u_errorName(status));
  return *n;
}

icu::UnicodeString normalize_once(const icu::UnicodeString& in,
                                  const NormalizationConfig& config) {
  icu::UnicodeString s = in;
  if (config.strip_control) {
    icu::UnicodeString stripped;
    for (int32_t i = 0; i < s.length();) {
      const UChar32 c = s.char32At(i);
      stripped.append(u_charType(c) == U_CONTROL_CHAR ? UChar32{' '} : c);
      i += U16_LENGTH(c);
    }
    s = stripped;
  }
  UErrorCode status = U_ZERO_ERROR;
  s = normalizer_for(config.unicode_form).normalize(s, status);
  if (U_FAILURE(status))
    throw Error(std::string("normalization failed: ") + u_errorName(status));
  if (config.lowercase) s.toLower(icu::Locale::getRoot());
  return s;
}

}  // namespace

std::string normalize_text(std::string_view text, const NormalizationConfig& config) {
  if (const auto bad = utf8::find_invalid(text); bad != utf8::kValid)
    throw DecodeError(bad);
  if (utf8::is_ascii(text)) return normalize_ascii(text, config);

  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  // Lowercasing can produce text that is not in the requested normal form
  // (and vice versa), so iterate to a fixpoint. Two rounds suffice in
  // practice; the bound only guards against pathological input.
  for (int round = 0; round < 8; ++round) {
    icu::UnicodeString next = normalize_once(u, config);
    if (next == u) break;
    u = std::move(next);
  }
  std::string out;
  u.toUTF8String(out);
  return out;
}

void for_each_word(std::string_view text,
                   const std::function<void(std::string_view)>& fn) {
  std::size_t word_start = 0;
  bool in_word = false;
  for (std::size_t pos = 0; pos < text.size();) {
    const std::size_t start = pos;
    const char32_t c = utf8::next(text, pos);
    switch (classify(c)) {
      case CharClass::kWord:
        if (!in_word) {
          word_start = start;
          in_word = true;
        }
        break;
      case CharClass::kSpace:
        if (in_word) fn(text.substr(word_start, start - word_start));
        in_word = false;
        break;
      case CharClass::kPunct:
        if (in_word) fn(text.substr(word_start, start - word_start));
        in_word = false;
        fn(text.substr(start, pos - start));
        break;
    }
  }
  if (in_word) fn(text.substr(word_start));
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  for_each_word(text, [&](std::string_view w) { words.emplace_back(w); });
  return words;
}

void WordFrequencyTable::add(std::string_view word, std::uint64_t count) {
  if (word.empty()) throw std::invalid_argument("empty word");
  if (count == 0) throw std::invalid_argument("zero count for word: " + std::string(word));
  for (std::size_t pos = 0; pos < word.size();) {
    if (classify(utf8::next(word, pos)) == CharClass::kSpace)
      throw std::invalid_argument("word contains whitespace: " + std::string(word));
  }
  auto it = entries_.find(word);
  if (it == entries_.end()) {
    entries_.emplace(std::string(word), count);
  } else {
    it->second += count;
  }
  total_ += count;
}

void WordFrequencyTable::merge(const WordFrequencyTable& other) {
  for (const auto& [word, count] : other.entries_) {
    auto [it, inserted] = entries_.try_emplace(word, count);
    if (!inserted) it->second += count;
  }
  total_ += other.total_;
}

std::uint64_t WordFrequencyTable::count(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? 0 : it->second;
}

std::vector<WordCount> WordFrequencyTable::sorted_by_frequency() const {
  std::vector<WordCount> out;
  out.reserve(entries_.size());
  for (const auto& [word, count] : entries_) out.push_back({word, count});
  std::sort(out.begin(), out.end(), [](const WordCount& a, const WordCount& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.word < b.word;
  });
  return out;
}

void WordFrequencyTable::write_tsv(std::ostream& os) const {
  for (const auto& wc : sorted_by_frequency()) os << wc.word << '\t' << wc.count << '\n';
}

namespace {

// Counting after validation: lines are known to be valid UTF-8.
void count_line(std::string_view line, const NormalizationConfig& config,
                WordFrequencyTable& table) {
  const std::string normalized = normalize_text(line, config);
  for_each_word(normalized, [&](std::string_view w) { table.add(w); });
}

WordFrequencyTable count_range(const std::vector<std::string>& docs, std::size_t begin,
                               std::size_t end, const NormalizationConfig& config) {
  WordFrequencyTable table;
  for (std::size_t i = begin; i < end; ++i) count_line(docs[i], config, table);
  return table;
}

}  // namespace

WordFrequencyTable build_frequency_table(std::istream& corpus,
                                         const NormalizationConfig& config) {
  WordFrequencyTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(corpus, line)) {
    ++line_no;
    if (const auto bad = utf8::find_invalid(line); bad != utf8::kValid)
      throw DecodeError(bad, "line " + std::to_string(line_no));
    count_line(line, config, table);
  }
  if (corpus.bad()) throw IoError("<stream>", "read failure");
  return table;
}

WordFrequencyTable build_frequency_table(const std::vector<std::string>& documents,
                                         const NormalizationConfig& config,
                                         unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n = documents.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (const auto bad = utf8::find_invalid(documents[i]); bad != utf8::kValid)
      throw DecodeError(bad, "document " + std::to_string(i + 1));
  }
  const std::size_t shards = std::min<std::size_t>(threads, std::max<std::size_t>(n, 1));
  if (shards <= 1) return count_range(documents, 0, n, config);

  std::vector<std::future<WordFrequencyTable>> parts;
  const std::size_t per = (n + shards - 1) / shards;
  for (std::size_t begin = 0; begin < n; begin += per) {
    const std::size_t end = std::min(n, begin + per);
    parts.push_back(std::async(std::launch::async, count_range, std::cref(documents),
                               begin, end, std::cref(config)));
  }
  WordFrequencyTable table;
  for (auto& part : parts) table.merge(part.get());
  return table;
}

std::vector<std::filesystem::path> expand_inputs(
    const std::vector<std::filesystem::path>& inputs) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& input : inputs) {
    std::error_code ec;
    if (fs::is_directory(input, ec)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::recursive_directory_iterator(input, ec)) {
        if (entry.is_regular_file()) found.push_back(entry.path());
      }
      if (ec) throw IoError(input.string(), ec.message());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::exists(input, ec)) {
      files.push_back(input);
    } else {
      throw IoError(input.string(), "no such file or directory");
    }
  }
  return files;
}

std::vector<std::string> read_lines(const std::vector<std::filesystem::path>& inputs) {
  std::vector<std::string> lines;
  for (const auto& path : expand_inputs(inputs)) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path.string(), "cannot open for reading");
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (const auto bad = utf8::find_invalid(line); bad != utf8::kValid)
        throw DecodeError(bad, path.string() + ":" + std::to_string(line_no));
      lines.push_back(std::move(line));
    }
    if (in.bad()) throw IoError(path.string(), "read failure");
  }
  return lines;
}

WordFrequencyTable build_frequency_table(const std::vector<std::filesystem::path>& inputs,
                                         const NormalizationConfig& config,
                                         unsigned threads) {
  return build_frequency_table(read_lines(inputs), config, threads);
}

}  // namespace semtok
