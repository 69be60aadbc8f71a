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


#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles/oracles.h"
#include "semtok/codec.h"
#include "semtok/error.h"

namespace semtok {
namespace {

Vocabulary make_vocab(const std::vector<std::string>& tokens, bool with_specials = true) {
  std::vector<TokenSpec> specs;
  for (const auto& t : tokens) specs.push_back({t, Segment::kSemantic, -1.0});
  if (!with_specials) return Vocabulary::build(std::move(specs));
  return Vocabulary::build(default_special_tokens(), std::move(specs));
}

const std::vector<std::string> kTable4Tokens = {
    "condit", "##ion", "##ions", "##ioning", "##ioned", "##ional",
    "##ioner", "##ionality", "##ionable", "##ionally"};

using Pieces = std::vector<std::string>;

TEST(EncodeWord, Table4) {
  const Vocabulary v = make_vocab(kTable4Tokens);
  EXPECT_EQ(encode_word("condition", v), (Pieces{"condit", "##ion"}));
  EXPECT_EQ(encode_word("conditions", v), (Pieces{"condit", "##ions"}));
  EXPECT_EQ(encode_word("conditioning", v), (Pieces{"condit", "##ioning"}));
  EXPECT_EQ(encode_word("conditioned", v), (Pieces{"condit", "##ioned"}));
  EXPECT_EQ(encode_word("conditional", v), (Pieces{"condit", "##ional"}));
  EXPECT_EQ(encode_word("conditioner", v), (Pieces{"condit", "##ioner"}));
  EXPECT_EQ(encode_word("conditionality", v), (Pieces{"condit", "##ionality"}));
  EXPECT_EQ(encode_word("conditionable", v), (Pieces{"condit", "##ionable"}));
  EXPECT_EQ(encode_word("conditionally", v), (Pieces{"condit", "##ionally"}));
}

TEST(EncodeWord, Basics) {
  const Vocabulary v = make_vocab({"advis", "##e", "a", "ab", "##b", "##bc", "##c"});
  EXPECT_EQ(encode_word("advise", v), (Pieces{"advis", "##e"}));
  EXPECT_EQ(encode_word("qx", v), (Pieces{"[UNK]"}));
  EXPECT_EQ(encode_word("abc", v), (Pieces{"ab", "##c"}));  // greedy, not a + ##bc
  EXPECT_EQ(encode_word("abd", v), (Pieces{"[UNK]"}));       // no backtracking
  EXPECT_EQ(encode_word("a", v), (Pieces{"a"}));
  EXPECT_EQ(encode_word("e", v), (Pieces{"[UNK]"}));         // ##e is continuation only
}

TEST(EncodeWord, MaxWordChars) {
  const Vocabulary v = make_vocab({"a", "##a"});
  EXPECT_EQ(encode_word(std::string(100, 'a'), v).size(), 100u);
  EXPECT_EQ(encode_word(std::string(101, 'a'), v), (Pieces{"[UNK]"}));
  EXPECT_EQ(encode_word("aaaa", v, 3), (Pieces{"[UNK]"}));
  // The limit counts code points, not bytes.
  const Vocabulary u = make_vocab({"\xC3\xA9", "##\xC3\xA9"});
  EXPECT_EQ(encode_word("\xC3\xA9\xC3\xA9\xC3\xA9", u, 3).size(), 3u);
}

TEST(EncodeWord, SpecialsNeverMatch) {
  const Vocabulary v = make_vocab({"[", "##u"});
  EXPECT_EQ(encode_word("[UNK]", v), (Pieces{"[UNK]"}));
}

// Randomized comparison with the scan-every-token oracle over small
// alphabets where prefixes collide often.
TEST(EncodeWord, MatchesGreedyOracle) {
  std::mt19937 rng(20240517);
  const std::vector<std::string> alphabet = {"a", "b", "c", "\xC3\xA9", "\xE4\xB8\xAD"};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(alphabet.size()) - 1);
  std::uniform_int_distribution<int> token_len(1, 4), word_len(1, 9), cont(0, 1),
      vocab_size(1, 200);
  int instances = 0, non_unk = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::set<std::string> tokens;
    const int n = vocab_size(rng);
    for (int i = 0; i < n; ++i) {
      std::string t = cont(rng) ? "##" : "";
      for (int k = token_len(rng); k > 0; --k) t += alphabet[pick(rng)];
      tokens.insert(t);
    }
    const std::vector<std::string> list(tokens.begin(), tokens.end());
    const Vocabulary v = make_vocab(list);
    for (int w = 0; w < 5; ++w) {
      std::string word;
      for (int k = word_len(rng); k > 0; --k) word += alphabet[pick(rng)];
      const auto expected = oracle::greedy_segment(word, list);
      const Pieces got = encode_word(word, v);
      ++instances;
      if (expected) {
        ++non_unk;
        ASSERT_EQ(got, *expected) << word;
        // The greedy path is one of the valid segmentations.
        std::vector<std::string> cur;
        std::vector<std::vector<std::string>> all;
        oracle::all_segmentations(word, 0, tokens, cur, all);
        ASSERT_NE(std::find(all.begin(), all.end(), got), all.end());
      } else {
        ASSERT_EQ(got, (Pieces{"[UNK]"})) << word;
      }
    }
  }
  EXPECT_GE(instances, 1000);
  EXPECT_GT(non_unk, instances / 10);
}

TEST(EncodeWord, PiecesReassembleWord) {
  const Vocabulary v = make_vocab({"t", "th", "the", "##h", "##e", "##r", "##re", "##s"});
  for (const std::string w : {"the", "there", "theres", "ths", "thhh"}) {
    const Pieces p = encode_word(w, v);
    ASSERT_NE(p.front(), "[UNK]") << w;
    EXPECT_FALSE(is_continuation(p.front()));
    std::string joined;
    for (const auto& x : p) joined += token_payload(x);
    EXPECT_EQ(joined, w);
  }
}

TEST(EncodeText, Basics) {
  const Vocabulary v = make_vocab(kTable4Tokens);
  EXPECT_EQ(encode_text("", v), Encoding{});
  const Encoding e = encode_text("Condition conditions", v);
  EXPECT_EQ(e.pieces, (Pieces{"condit", "##ion", "condit", "##ions"}));
  EXPECT_EQ(e.ids, pieces_to_ids(e.pieces, v));
  EXPECT_TRUE(e.unk_positions.empty());

  const Encoding u = encode_text("condition, xyz", v);
  EXPECT_EQ(u.pieces, (Pieces{"condit", "##ion", "[UNK]", "[UNK]"}));
  EXPECT_EQ(u.unk_positions, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(u.ids[2], *v.unk_id());
}

TEST(EncodeText, MissingUnkIsAnError) {
  const Vocabulary v = make_vocab({"a"}, false);
  EXPECT_EQ(encode_text("a a", v).ids.size(), 2u);
  EXPECT_THROW(encode_text("b", v), Error);
  EXPECT_THROW(encode_text("a\xFF", v), DecodeError);
}

TEST(Decode, Basics) {
  const Vocabulary v = make_vocab(kTable4Tokens);
  EXPECT_EQ(decode(pieces_to_ids(Pieces{"condit", "##ion"}, v), v), "condition");
  EXPECT_EQ(decode(std::vector<std::int32_t>{}, v), "");
  EXPECT_EQ(decode(pieces_to_ids(Pieces{"condit", "[UNK]", "condit", "##ions"}, v), v),
            "condit [UNK] conditions");
  EXPECT_THROW(decode(std::vector<std::int32_t>{999}, v), std::out_of_range);
  EXPECT_THROW(pieces_to_ids(Pieces{"nope"}, v), std::out_of_range);
}

TEST(Decode, RoundTripRandomText) {
  const Vocabulary v = make_vocab({"a", "b", "c", "##a", "##b", "##c", "ab", "##ab", ",", "."});
  std::mt19937 rng(3);
  const std::string chars = "abcABC ,.";
  std::uniform_int_distribution<std::size_t> pick(0, chars.size() - 1), len(0, 40);
  for (int i = 0; i < 500; ++i) {
    std::string text;
    for (std::size_t k = len(rng); k > 0; --k) text += chars[pick(rng)];
    const Encoding e = encode_text(text, v);
    ASSERT_TRUE(e.unk_positions.empty());
    std::string expected;
    for (const auto& w : split_words(normalize_text(text))) {
      if (!expected.empty()) expected += ' ';
      expected += w;
    }
    ASSERT_EQ(decode(e.ids, v), expected) << text;
  }
}

}  // namespace
}  // namespace semtok
