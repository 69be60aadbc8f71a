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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles/oracles.h"
#include "semtok/bpe.h"
#include "semtok/codec.h"
#include "semtok/error.h"

namespace semtok {
namespace {

namespace fs = std::filesystem;

const fs::path kData = SEMTOK_TEST_DATA_DIR;

using Pieces = std::vector<std::string>;

WordFrequencyTable table(std::initializer_list<std::pair<const char*, std::uint64_t>> items) {
  WordFrequencyTable t;
  for (const auto& [w, c] : items) t.add(w, c);
  return t;
}

TrainerConfig config() { return TrainerConfig{}; }

std::vector<std::string> regular_tokens(const Vocabulary& v) {
  std::vector<std::string> out;
  for (const auto& e : v.entries())
    if (e.segment != Segment::kSpecial) out.push_back(e.token);
  return out;
}

std::vector<std::pair<std::string, std::uint64_t>> as_pairs(const std::vector<WordCount>& words) {
  std::vector<std::pair<std::string, std::uint64_t>> out;
  for (const auto& w : words) out.emplace_back(w.word, w.count);
  return out;
}

std::set<std::string> char_set(const Alphabet& a) {
  std::set<std::string> out;
  for (const auto& t : a.tokens) out.insert(std::string(token_payload(t.token)));
  return out;
}

std::set<std::string> token_set(const Alphabet& a) {
  std::set<std::string> out;
  for (const auto& t : a.tokens) out.insert(t.token);
  return out;
}

TEST(SelectAlphabet, FormsFollowPositions) {
  const Alphabet a = select_alphabet(table({{"aaab", 10}}), 1.0);
  ASSERT_EQ(a.tokens.size(), 3u);
  EXPECT_EQ(a.tokens[0], (CandidateStats{"##a", 20}));
  EXPECT_EQ(a.tokens[1], (CandidateStats{"##b", 10}));
  EXPECT_EQ(a.tokens[2], (CandidateStats{"a", 10}));
}

TEST(SelectAlphabet, CoverageDropsRareCharacters) {
  const auto t = table({{"ab", 1000}, {"q", 1}});
  EXPECT_EQ(char_set(select_alphabet(t, 0.99)), (std::set<std::string>{"a", "b"}));
  EXPECT_EQ(char_set(select_alphabet(t, 1.0)), (std::set<std::string>{"a", "b", "q"}));
  // At least one character even for tiny coverage.
  EXPECT_EQ(select_alphabet(t, 1e-9).characters.size(), 1u);
}

TEST(TrainBpe, FirstMergeIsDoubleA) {
  const BpeModel m = train_bpe_model(table({{"aaab", 10}}), 5 + 3 + 2, config());
  ASSERT_FALSE(m.merges.empty());
  EXPECT_EQ(m.merges[0], (MergeRule{"a", "##a", 0}));
  EXPECT_EQ(m.vocab.size(), 10u);
  EXPECT_TRUE(m.vocab.lookup("aa").has_value());
}

TEST(TrainBpe, BudgetOfAlphabetOnlyHasNoMerges) {
  const BpeModel m = train_bpe_model(table({{"aaab", 10}}), 5 + 3, config());
  EXPECT_TRUE(m.merges.empty());
  EXPECT_EQ(regular_tokens(m.vocab), (std::vector<std::string>{"##a", "##b", "a"}));
  for (const auto& e : m.vocab.entries())
    if (e.segment != Segment::kSpecial) EXPECT_EQ(e.segment, Segment::kResidual);
}

TEST(TrainBpe, TooSmallVocabularyIsConfigError) {
  EXPECT_THROW(train_bpe_model(table({{"aaab", 10}}), 7, config()), ConfigError);
}

TEST(TrainBpe, TiesBreakLexicographically) {
  // Every pair occurs once; (a, b) sorts first.
  const BpeModel m = train_bpe_model(table({{"cd", 1}, {"ab", 1}}), 5 + 4 + 1, config());
  ASSERT_EQ(m.merges.size(), 1u);
  EXPECT_EQ(m.merges[0], (MergeRule{"a", "##b", 0}));
}

TEST(ApplyMerges, Examples) {
  const std::vector<MergeRule> rules = {{"a", "##a", 0}};
  EXPECT_EQ(apply_merges("aaab", rules), (Pieces{"aa", "##a", "##b"}));
  EXPECT_EQ(apply_merges("abc", {}), (Pieces{"a", "##b", "##c"}));
  EXPECT_EQ(apply_merges("a", {}), (Pieces{"a"}));
  const Vocabulary alpha = Vocabulary::build(std::vector<TokenSpec>{{"a", Segment::kResidual, -1},
                                                                    {"##a", Segment::kResidual, -1}});
  EXPECT_EQ(apply_merges("aa", rules, &alpha), (Pieces{"aa"}));
  EXPECT_EQ(apply_merges("ab", rules, &alpha), (Pieces{"[UNK]"}));
}

TEST(ApplyMerges, PreservesCharacters) {
  const auto words = build_frequency_table(std::vector<std::string>{"the cat sat on the mat"});
  const BpeModel m = train_bpe_model(words, 5 + 30, config());
  for (const std::string w : {"the", "matter", "sat", "cathode", "zzz"}) {
    std::string joined;
    for (const auto& p : apply_merges(w, m.merges)) joined += token_payload(p);
    EXPECT_EQ(joined, w);
  }
}

// Replayed merges segment training words into vocabulary tokens.
TEST(ApplyMerges, ProducesVocabularyTokensOnTrainingWords) {
  const auto t = table({{"lower", 5}, {"lowest", 2}, {"newer", 6}, {"wider", 3}, {"new", 2}});
  const BpeModel m = train_bpe_model(t, 5 + 40, config());
  for (const auto& [w, c] : t.entries())
    for (const auto& p : apply_merges(w, m.merges)) EXPECT_TRUE(m.vocab.lookup(p)) << w << " " << p;
}

TEST(LearnMerges, MatchesNaiveOracleOnRandomInputs) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> letter(0, 3), len(1, 8), count(1, 20), nwords(1, 30),
      budget(0, 60);
  for (int trial = 0; trial < 300; ++trial) {
    WordFrequencyTable t;
    for (int i = nwords(rng); i > 0; --i) {
      std::string w;
      for (int k = len(rng); k > 0; --k) w += static_cast<char>('a' + letter(rng));
      t.add(w, count(rng));
    }
    const Alphabet alphabet = select_alphabet(t, 1.0);
    const auto words = t.sorted_by_frequency();
    const std::size_t b = budget(rng);
    const BpeMerges got = learn_merges(words, alphabet, b);
    const oracle::BpeResult want =
        oracle::naive_bpe(as_pairs(words), char_set(alphabet), token_set(alphabet), b);
    ASSERT_EQ(got.tokens.size(), want.tokens.size()) << "trial " << trial;
    for (std::size_t i = 0; i < want.tokens.size(); ++i) {
      ASSERT_EQ(got.tokens[i].token, want.tokens[i].token) << "trial " << trial << " i " << i;
      ASSERT_EQ(got.tokens[i].occurrence_mass, want.tokens[i].mass);
    }
    ASSERT_EQ(got.rules.size(), want.rules.size());
    for (std::size_t i = 0; i < want.rules.size(); ++i) {
      ASSERT_EQ(got.rules[i].left, want.rules[i].left);
      ASSERT_EQ(got.rules[i].right, want.rules[i].right);
      ASSERT_EQ(got.rules[i].rank, static_cast<int>(i));
    }
  }
}

TEST(LearnMerges, SkippedTokensAreNotEmitted) {
  const auto t = table({{"abab", 5}, {"abc", 3}});
  const Alphabet alphabet = select_alphabet(t, 1.0);
  const auto words = t.sorted_by_frequency();
  const BpeMerges got = learn_merges(words, alphabet, 10,
                                     [](std::string_view tok) { return tok == "ab"; });
  const auto want = oracle::naive_bpe(as_pairs(words), char_set(alphabet), token_set(alphabet),
                                      10, {"ab"});
  ASSERT_EQ(got.tokens.size(), want.tokens.size());
  for (std::size_t i = 0; i < got.tokens.size(); ++i) {
    EXPECT_NE(got.tokens[i].token, "ab");
    EXPECT_EQ(got.tokens[i].token, want.tokens[i].token);
  }
}

// A slice of the mini-corpus checked merge by merge against the oracle.
TEST(LearnMerges, MatchesNaiveOracleOnCorpusSlice) {
  auto lines = read_lines({kData / "mini_corpus.txt"});
  lines.resize(1500);
  const auto t = build_frequency_table(lines);
  const Alphabet alphabet = select_alphabet(t, 0.9999);
  const auto words = t.sorted_by_frequency();
  const BpeMerges got = learn_merges(words, alphabet, 300);
  const auto want =
      oracle::naive_bpe(as_pairs(words), char_set(alphabet), token_set(alphabet), 300);
  ASSERT_EQ(got.tokens.size(), 300u);
  ASSERT_EQ(want.tokens.size(), 300u);
  for (std::size_t i = 0; i < 300; ++i) {
    ASSERT_EQ(got.tokens[i].token, want.tokens[i].token) << i;
    ASSERT_EQ(got.tokens[i].occurrence_mass, want.tokens[i].mass) << i;
  }
}

TEST(TrainBpe, MiniCorpusMatchesGolden) {
  const auto t = build_frequency_table(std::vector<fs::path>{kData / "mini_corpus.txt"});
  const BpeModel m = train_bpe_model(t, 4096, config());
  std::ifstream golden(kData / "golden" / "mini_bpe_4096.model", std::ios::binary);
  std::stringstream expected;
  expected << golden.rdbuf();
  ASSERT_FALSE(expected.str().empty());
  EXPECT_TRUE(serialize_model(m.vocab) == expected.str());
  EXPECT_EQ(m.vocab.size(), 4096u);
  EXPECT_EQ(m.vocab.num_semantic(), 0u);
}

TEST(TrainBpe, BaselineEncodesWithCodec) {
  const auto t = table({{"lower", 5}, {"lowest", 2}, {"newer", 6}, {"wider", 3}});
  const Vocabulary v = train_bpe(t, 5 + 30, config());
  for (const auto& [w, c] : t.entries()) EXPECT_NE(encode_word(w, v).front(), "[UNK]") << w;
}

}  // namespace
}  // namespace semtok
