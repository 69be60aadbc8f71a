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

// English Porter 2 stemmer, following the Snowball english.sbl rules as
// published with the standard test vocabulary: exception lists, the
// gener/commun/arsen region prefixes and steps 1a through 5. The word is
// processed as code points; only ASCII letters take part in the rules.

#include "semtok/stemmer.h"

#include <array>
#include <cstddef>
#include <string>
#include <utility>

#include "utf8.h"

namespace semtok {
namespace {

using Str = std::u32string;
using View = std::u32string_view;

constexpr char32_t kY = U'Y';  // consonant y, restored in the postlude

bool is_vowel(char32_t c) {
  return c == U'a' || c == U'e' || c == U'i' || c == U'o' || c == U'u' || c == U'y';
}

bool is_vowel_wxy(char32_t c) { return is_vowel(c) || c == U'w' || c == U'x' || c == kY; }

bool ends_with(const Str& w, View suffix) {
  return w.size() >= suffix.size() &&
         View(w).substr(w.size() - suffix.size()) == suffix;
}

void replace_suffix(Str& w, std::size_t suffix_len, View with) {
  w.replace(w.size() - suffix_len, suffix_len, with);
}

// Longest entry of `table` that `w` ends with, or nullptr.
template <typename Entry, std::size_t N>
const Entry* longest_suffix(const Str& w, const std::array<Entry, N>& table) {
  const Entry* best = nullptr;
  for (const Entry& e : table) {
    if (ends_with(w, e.suffix) && (best == nullptr || e.suffix.size() > best->suffix.size()))
      best = &e;
  }
  return best;
}

struct Word {
  Str s;
  std::size_t p1 = 0;  // start of R1
  std::size_t p2 = 0;  // start of R2
};

// Short syllable ending at `end` (exclusive).
bool short_syllable_before(const Str& w, std::size_t end) {
  if (end >= 3 && !is_vowel_wxy(w[end - 1]) && is_vowel(w[end - 2]) &&
      !is_vowel(w[end - 3]))
    return true;
  return end == 2 && !is_vowel(w[1]) && is_vowel(w[0]);
}

bool contains_vowel(const Str& w, std::size_t end) {
  for (std::size_t i = 0; i < end; ++i)
    if (is_vowel(w[i])) return true;
  return false;
}

std::optional<Str> exception1(const Str& w) {
  struct Rule {
    View word;
    View stem;
  };
  static constexpr std::array<Rule, 18> kRules = {{
      {U"skis", U"ski"},     {U"skies", U"sky"},   {U"dying", U"die"},
      {U"lying", U"lie"},    {U"tying", U"tie"},   {U"idly", U"idl"},
      {U"gently", U"gentl"}, {U"ugly", U"ugli"},   {U"early", U"earli"},
      {U"only", U"onli"},    {U"singly", U"singl"}, {U"sky", U"sky"},
      {U"news", U"news"},    {U"howe", U"howe"},   {U"atlas", U"atlas"},
      {U"cosmos", U"cosmos"}, {U"bias", U"bias"},  {U"andes", U"andes"},
  }};
  for (const Rule& r : kRules)
    if (View(w) == r.word) return Str(r.stem);
  return std::nullopt;
}

bool exception2(const Str& w) {
  static constexpr std::array<View, 8> kWords = {
      U"inning", U"outing", U"canning", U"herring",
      U"earring", U"proceed", U"exceed", U"succeed"};
  for (View x : kWords)
    if (View(w) == x) return true;
  return false;
}

void prelude(Str& w) {
  if (!w.empty() && w[0] == U'\'') w.erase(0, 1);
  if (!w.empty() && w[0] == U'y') w[0] = kY;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == U'y' && is_vowel(w[i - 1])) w[i] = kY;
}

// Position just past the first non-vowel that follows a vowel, at or after
// `from`; w.size() when there is none.
std::size_t region_start(const Str& w, std::size_t from) {
  std::size_t i = from;
  while (i < w.size() && !is_vowel(w[i])) ++i;
  while (i < w.size() && is_vowel(w[i])) ++i;
  return i < w.size() ? i + 1 : w.size();
}

void mark_regions(Word& word) {
  const Str& w = word.s;
  static constexpr std::array<View, 3> kPrefixes = {U"gener", U"commun", U"arsen"};
  word.p1 = w.size();
  bool prefixed = false;
  for (View p : kPrefixes) {
    if (View(w).substr(0, p.size()) == p) {
      word.p1 = p.size();
      prefixed = true;
      break;
    }
  }
  if (!prefixed) word.p1 = region_start(w, 0);
  word.p2 = word.p1 < w.size() ? region_start(w, word.p1) : w.size();
}

void step_1a(Word& word) {
  Str& w = word.s;
  for (View apostrophe : {View(U"'s'"), View(U"'s"), View(U"'")}) {
    if (ends_with(w, apostrophe)) {
      w.erase(w.size() - apostrophe.size());
      break;
    }
  }
  if (ends_with(w, U"sses")) {
    replace_suffix(w, 4, U"ss");
  } else if (ends_with(w, U"ied") || ends_with(w, U"ies")) {
    replace_suffix(w, 3, w.size() - 3 >= 2 ? View(U"i") : View(U"ie"));
  } else if (ends_with(w, U"us") || ends_with(w, U"ss")) {
    // unchanged
  } else if (ends_with(w, U"s")) {
    // Delete when a vowel occurs before the letter preceding the s.
    if (w.size() >= 2 && contains_vowel(w, w.size() - 2)) w.pop_back();
  }
}

void step_1b(Word& word) {
  Str& w = word.s;
  struct Entry {
    View suffix;
    bool eed;
  };
  static constexpr std::array<Entry, 6> kSuffixes = {{
      {U"eed", true}, {U"eedly", true}, {U"ed", false},
      {U"edly", false}, {U"ing", false}, {U"ingly", false},
  }};
  const Entry* e = longest_suffix(w, kSuffixes);
  if (e == nullptr) return;
  const std::size_t start = w.size() - e->suffix.size();
  if (e->eed) {
    if (start >= word.p1) replace_suffix(w, e->suffix.size(), U"ee");
    return;
  }
  if (!contains_vowel(w, start)) return;
  w.erase(start);
  if (ends_with(w, U"at") || ends_with(w, U"bl") || ends_with(w, U"iz")) {
    w.push_back(U'e');
    return;
  }
  static constexpr std::array<View, 9> kDoubles = {U"bb", U"dd", U"ff", U"gg", U"mm",
                                                   U"nn", U"pp", U"rr", U"tt"};
  for (View d : kDoubles) {
    if (ends_with(w, d)) {
      w.pop_back();
      return;
    }
  }
  if (w.size() == word.p1 && short_syllable_before(w, w.size())) w.push_back(U'e');
}

void step_1c(Word& word) {
  Str& w = word.s;
  if (w.size() < 3) return;
  const char32_t last = w.back();
  if ((last == U'y' || last == kY) && !is_vowel(w[w.size() - 2])) w.back() = U'i';
}

struct Replacement {
  View suffix;
  View with;
};

bool valid_li(char32_t c) {
  return c == U'c' || c == U'd' || c == U'e' || c == U'g' || c == U'h' || c == U'k' ||
         c == U'm' || c == U'n' || c == U'r' || c == U't';
}

void step_2(Word& word) {
  Str& w = word.s;
  static constexpr std::array<Replacement, 24> kRules = {{
      {U"tional", U"tion"}, {U"enci", U"ence"},   {U"anci", U"ance"},
      {U"abli", U"able"},   {U"entli", U"ent"},   {U"izer", U"ize"},
      {U"ization", U"ize"}, {U"ational", U"ate"}, {U"ation", U"ate"},
      {U"ator", U"ate"},    {U"alism", U"al"},    {U"aliti", U"al"},
      {U"alli", U"al"},     {U"fulness", U"ful"}, {U"ousli", U"ous"},
      {U"ousness", U"ous"}, {U"iveness", U"ive"}, {U"iviti", U"ive"},
      {U"biliti", U"ble"},  {U"bli", U"ble"},     {U"ogi", U"og"},
      {U"fulli", U"ful"},   {U"lessli", U"less"}, {U"li", U""},
  }};
  const Replacement* r = longest_suffix(w, kRules);
  if (r == nullptr) return;
  const std::size_t start = w.size() - r->suffix.size();
  if (start < word.p1) return;
  if (r->suffix == U"ogi") {
    if (start == 0 || w[start - 1] != U'l') return;
  } else if (r->suffix == U"li") {
    if (start == 0 || !valid_li(w[start - 1])) return;
  }
  replace_suffix(w, r->suffix.size(), r->with);
}

void step_3(Word& word) {
  Str& w = word.s;
  static constexpr std::array<Replacement, 9> kRules = {{
      {U"tional", U"tion"}, {U"ational", U"ate"}, {U"alize", U"al"},
      {U"icate", U"ic"},    {U"iciti", U"ic"},    {U"ical", U"ic"},
      {U"ful", U""},        {U"ness", U""},       {U"ative", U""},
  }};
  const Replacement* r = longest_suffix(w, kRules);
  if (r == nullptr) return;
  const std::size_t start = w.size() - r->suffix.size();
  if (start < word.p1) return;
  if (r->suffix == U"ative" && start < word.p2) return;
  replace_suffix(w, r->suffix.size(), r->with);
}

void step_4(Word& word) {
  Str& w = word.s;
  struct Entry {
    View suffix;
  };
  static constexpr std::array<Entry, 18> kSuffixes = {{
      {U"al"},  {U"ance"}, {U"ence"}, {U"er"},  {U"ic"},  {U"able"},
      {U"ible"}, {U"ant"}, {U"ement"}, {U"ment"}, {U"ent"}, {U"ism"},
      {U"ate"}, {U"iti"},  {U"ous"},  {U"ive"}, {U"ize"}, {U"ion"},
  }};
  const Entry* e = longest_suffix(w, kSuffixes);
  if (e == nullptr) return;
  const std::size_t start = w.size() - e->suffix.size();
  if (start < word.p2) return;
  if (e->suffix == U"ion" && (start == 0 || (w[start - 1] != U's' && w[start - 1] != U't')))
    return;
  w.erase(start);
}

void step_5(Word& word) {
  Str& w = word.s;
  if (w.empty()) return;
  const std::size_t start = w.size() - 1;
  if (w.back() == U'e') {
    if (start >= word.p2 || (start >= word.p1 && !short_syllable_before(w, start)))
      w.pop_back();
  } else if (w.back() == U'l') {
    if (start >= word.p2 && start > 0 && w[start - 1] == U'l') w.pop_back();
  }
}

void postlude(Str& w) {
  for (char32_t& c : w)
    if (c == kY) c = U'y';
}

}  // namespace

std::string stem(std::string_view word) {
  Str w = utf8::decode(word);
  if (auto e = exception1(w)) return utf8::encode(*e);
  if (w.size() < 3) return std::string(word);

  Word state{std::move(w)};
  prelude(state.s);
  mark_regions(state);
  step_1a(state);
  if (!exception2(state.s)) {
    step_1b(state);
    step_1c(state);
    step_2(state);
    step_3(state);
    step_4(state);
    step_5(state);
  }
  postlude(state.s);
  return utf8::encode(state.s);
}

std::optional<StemSplit> split_stem_suffix(std::string_view word, int min_stem_length) {
  if (word.empty()) return std::nullopt;
  std::string s = stem(word);
  if (s.size() >= word.size() || word.substr(0, s.size()) != s) return std::nullopt;
  if (static_cast<int>(utf8::length(s)) < min_stem_length) return std::nullopt;
  std::string suffix(word.substr(s.size()));
  return StemSplit{std::move(s), std::move(suffix)};
}

}  // namespace semtok
