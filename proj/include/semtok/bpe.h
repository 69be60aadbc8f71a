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

// Frequency-merge BPE restricted to word-internal merges.
//
// Words start as sequences of code points. A merge joins two adjacent
// symbols regardless of their position in the word; the resulting symbol is
// emitted as an initial token when it occurs at the start of a word and as a
// "##" continuation token when it occurs elsewhere. Pair counts are weighted
// by word frequency, the most frequent pair wins, and ties go to the
// lexicographically smallest (left, right) pair.

#ifndef SEMTOK_BPE_H_
#define SEMTOK_BPE_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "semtok/corpus.h"
#include "semtok/trainer.h"
#include "semtok/vocab.h"

namespace semtok {

// left is a bare payload, right is "##"-marked; the merged payload is
// left + payload(right).
struct MergeRule {
  std::string left;
  std::string right;
  int rank = 0;

  bool operator==(const MergeRule&) const = default;
};

struct Alphabet {
  // Single-character tokens in every position the character occurs, by
  // descending mass then token text.
  std::vector<CandidateStats> tokens;
  std::unordered_set<char32_t> characters;
};

// Smallest set of most frequent characters whose occurrence mass reaches
// `coverage` of the corpus character mass (ties by code point).
Alphabet select_alphabet(const WordFrequencyTable& freq, double coverage);

struct BpeMerges {
  std::vector<MergeRule> rules;
  // Emitted tokens in merge order with the occurrence mass of their form.
  std::vector<CandidateStats> tokens;
};

// Runs merges over `words` until `budget` tokens have been emitted or no
// pair is left. Words with a character outside `alphabet` are ignored.
// Tokens for which `skip` returns true are not emitted; their merge still
// applies.
BpeMerges learn_merges(std::span<const WordCount> words, const Alphabet& alphabet,
                       std::size_t budget,
                       const std::function<bool(std::string_view)>& skip = {});

struct BpeModel {
  Vocabulary vocab;
  std::vector<MergeRule> merges;
};

// Baseline vocabulary: specials, the alphabet, then merged tokens until
// `vocab_size`. Specials, character coverage and normalization come from
// `config`; config.vocab_size is ignored. Throws ConfigError when the
// alphabet does not fit.
BpeModel train_bpe_model(const WordFrequencyTable& freq, int vocab_size,
                         const TrainerConfig& config);
Vocabulary train_bpe(const WordFrequencyTable& freq, int vocab_size,
                     const TrainerConfig& config);

// Segments `word` by replaying `rules`: start from characters, then
// repeatedly merge every occurrence of the lowest-ranked applicable pair.
// With `alphabet`, a character whose form is missing from it turns the
// whole word into [UNK].
std::vector<std::string> apply_merges(std::string_view word,
                                      std::span<const MergeRule> rules,
                                      const Vocabulary* alphabet = nullptr);

}  // namespace semtok

#endif  // SEMTOK_BPE_H_
