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

// Small UTF-8 helpers shared by the library sources. Not installed.

#ifndef SEMTOK_SRC_UTF8_H_
#define SEMTOK_SRC_UTF8_H_

#include <unicode/utf8.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace semtok::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;
inline constexpr std::size_t kValid = static_cast<std::size_t>(-1);

// Decodes the code point starting at `pos` and advances `pos`. Ill-formed
// sequences yield U+FFFD.
inline char32_t next(std::string_view s, std::size_t& pos) {
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(s.data());
  const auto length = static_cast<std::int32_t>(s.size());
  auto i = static_cast<std::int32_t>(pos);
  UChar32 c;
  U8_NEXT(bytes, i, length, c);
  pos = static_cast<std::size_t>(i);
  return c < 0 ? kReplacement : static_cast<char32_t>(c);
}

// Offset of the first ill-formed byte, or kValid.
inline std::size_t find_invalid(std::string_view s) {
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(s.data());
  const auto length = static_cast<std::int32_t>(s.size());
  std::int32_t i = 0;
  while (i < length) {
    if (bytes[i] < 0x80) {
      ++i;
      continue;
    }
    const std::int32_t start = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) return static_cast<std::size_t>(start);
  }
  return kValid;
}

inline void append(std::string& out, char32_t c) {
  char buf[U8_MAX_LENGTH];
  std::int32_t n = 0;
  UBool error = false;
  U8_APPEND(reinterpret_cast<std::uint8_t*>(buf), n, U8_MAX_LENGTH,
            static_cast<UChar32>(c), error);
  if (error) {
    append(out, kReplacement);
    return;
  }
  out.append(buf, static_cast<std::size_t>(n));
}

inline std::u32string decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  for (std::size_t pos = 0; pos < s.size();) out.push_back(next(s, pos));
  return out;
}

inline std::string encode(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t c : s) append(out, c);
  return out;
}

inline std::size_t length(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

inline bool is_ascii(std::string_view s) {
  for (unsigned char c : s)
    if (c >= 0x80) return false;
  return true;
}

// Byte offsets of every code point start in `s`, followed by s.size().
inline void boundaries(std::string_view s, std::vector<std::uint32_t>& out) {
  out.clear();
  for (std::size_t pos = 0; pos < s.size();) {
    out.push_back(static_cast<std::uint32_t>(pos));
    next(s, pos);
  }
  out.push_back(static_cast<std::uint32_t>(s.size()));
}

}  // namespace semtok::utf8

#endif  // SEMTOK_SRC_UTF8_H_
