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

// Vocabulary efficiency measurements over a word frequency table.
//
// Unless stated otherwise statistics weight every distinct word once. A word
// that encodes to [UNK] costs one piece in the averages and never counts as
// represented.

#ifndef SEMTOK_METRICS_H_
#define SEMTOK_METRICS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "semtok/codec.h"
#include "semtok/corpus.h"
#include "semtok/trainer.h"
#include "semtok/vocab.h"

namespace semtok {

struct EfficiencyReport {
  std::uint64_t distinct_words = 0;
  // Distinct words encodable in at most max_pieces non-UNK pieces.
  std::uint64_t wordforms_le2 = 0;
  int max_pieces = 2;
  double avg_pieces = 0.0;
  double cov = 0.0;  // percent, population standard deviation / mean
  double unk_word_rate = 0.0;
  double occurrence_unk_rate = 0.0;
  // Stemmable words whose encoding starts with their stem.
  double stem_usage_rate = 0.0;
  // Occurrence-weighted counterparts of avg_pieces and cov.
  double occurrence_avg_pieces = 0.0;
  double occurrence_cov = 0.0;
};

struct SubwordStats {
  double avg_pieces = 0.0;
  double cov = 0.0;  // percent
};

struct UnkRates {
  double unk_word_rate = 0.0;
  double occurrence_unk_rate = 0.0;
};

// Mean and population coefficient of variation (percent) of `counts`.
SubwordStats piece_count_stats(std::span<const std::uint64_t> counts);

std::uint64_t wordform_coverage(const Vocabulary& vocab, const WordFrequencyTable& freq,
                                int max_pieces = 2);

SubwordStats subword_stats(const Vocabulary& vocab, const WordFrequencyTable& freq);

UnkRates unk_rates(const Vocabulary& vocab, const WordFrequencyTable& freq);

double stem_usage_rate(const Vocabulary& vocab, const WordFrequencyTable& freq,
                       int min_stem_length = kDefaultMinStemLength);

// Everything above in one pass.
EfficiencyReport evaluate(const Vocabulary& vocab, const WordFrequencyTable& freq,
                          int max_pieces = 2, int min_stem_length = kDefaultMinStemLength);

// "field<TAB>value" lines.
std::string render_tsv(const EfficiencyReport& report);
// Aligned "field  value" lines.
std::string render_text(const EfficiencyReport& report);

struct ComparisonReport {
  EfficiencyReport model;
  EfficiencyReport baseline;
};

// Reports for both vocabularies; deltas are model minus baseline.
ComparisonReport compare_vocabularies(const Vocabulary& model, const Vocabulary& baseline,
                                      const WordFrequencyTable& freq, int max_pieces = 2);

// "field<TAB>model<TAB>baseline<TAB>delta" lines after a header row.
std::string render_tsv(const ComparisonReport& report);
std::string render_text(const ComparisonReport& report);

struct SweepRow {
  double semantic_fraction = 0.0;
  double realized_fraction = 0.0;
  EfficiencyReport report;
};

struct SweepReport {
  std::vector<SweepRow> rows;  // ascending semantic_fraction
  // Whether each metric moves in one direction as the fraction grows.
  bool unk_monotone = false;
  bool coverage_monotone = false;
  bool avg_pieces_monotone = false;
};

// Trains one vocabulary per fraction (other settings from `base`) and
// evaluates it on `freq`.
SweepReport sweep_semantic_fraction(const WordFrequencyTable& freq, const TrainerConfig& base,
                                    std::span<const double> fractions, int max_pieces = 2);

std::string render_tsv(const SweepReport& report);

}  // namespace semtok

#endif  // SEMTOK_METRICS_H_
