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

// Two-segment vocabulary trainer.
//
// The semantic segment is filled first: corpus words are visited from most
// to least frequent, each stemmable word contributes its stem (initial
// token) and its suffix (continuation token), and unstemmable words are
// taken whole. Once the segment reaches its capacity no new tokens enter,
// but the occurrence mass of tokens already present keeps accumulating.
// The residual segment then receives single-character tokens for the
// character alphabet and BPE merges learned over the words the semantic
// segment cannot encode.

#ifndef SEMTOK_TRAINER_H_
#define SEMTOK_TRAINER_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "semtok/corpus.h"
#include "semtok/stemmer.h"
#include "semtok/vocab.h"

namespace semtok {

struct TrainerConfig {
  // |V| including special tokens.
  int vocab_size = 8192;
  // Target |semantic| / |regular tokens|, in (0, 1].
  double semantic_fraction = 0.9;
  // Words seen fewer times do not enter the semantic segment.
  int min_frequency = 2;
  int min_stem_length = kDefaultMinStemLength;
  // Fraction of corpus character mass guaranteed single-character tokens.
  double character_coverage = 0.9999;
  std::vector<std::string> specials = default_special_tokens();
  NormalizationConfig normalization;

  // Throws ConfigError.
  void validate() const;

  int regular_capacity() const { return vocab_size - static_cast<int>(specials.size()); }
  // round(f * (|V| - |specials|)).
  int semantic_capacity() const;
};

std::vector<CandidateStats> populate_semantic_segment(const WordFrequencyTable& freq,
                                                      const TrainerConfig& config);

struct ResidualSegment {
  // Alphabet tokens first, then merged tokens in merge order.
  std::vector<CandidateStats> tokens;
  std::size_t alphabet_tokens = 0;
  // Distinct words the semantic segment alone cannot encode.
  std::size_t residual_words = 0;
};

ResidualSegment train_bpe_residual(const WordFrequencyTable& freq,
                                   std::span<const CandidateStats> semantic,
                                   const TrainerConfig& config);

// ln(mass / total mass) per candidate.
std::vector<double> compute_scores(std::span<const CandidateStats> candidates);

struct TrainingSummary {
  std::size_t vocab_size = 0;
  std::size_t specials = 0;
  std::size_t semantic_tokens = 0;
  std::size_t residual_tokens = 0;
  std::size_t alphabet_tokens = 0;
  std::size_t residual_words = 0;
  std::size_t distinct_words = 0;
  std::uint64_t total_words = 0;
  double realized_fraction = 0.0;

  // "key: value" lines.
  std::string render() const;
};

struct TrainingResult {
  Vocabulary vocab;
  TrainingSummary summary;
};

TrainingResult train_from_table(const WordFrequencyTable& freq, const TrainerConfig& config);

// Reads the corpus (one document per line) and trains.
Vocabulary train(std::istream& corpus, const TrainerConfig& config);

}  // namespace semtok

#endif  // SEMTOK_TRAINER_H_
