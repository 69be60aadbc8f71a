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

#include "semtok/trainer.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "semtok/bpe.h"
#include "semtok/codec.h"
#include "semtok/error.h"

namespace semtok {

void TrainerConfig::validate() const {
  if (specials.empty() == false) {
    std::unordered_set<std::string> seen;
    for (const auto& s : specials) {
      if (s.empty() || s.find_first_of("\t\n\r") != std::string::npos)
        throw ConfigError("invalid special token '" + s + "'");
      if (is_continuation(s)) throw ConfigError("special token with '##' prefix: " + s);
      if (!seen.insert(s).second) throw ConfigError("duplicate special token: " + s);
    }
  }
  if (vocab_size <= static_cast<int>(specials.size()))
    throw ConfigError("vocab_size (" + std::to_string(vocab_size) +
                      ") must exceed the number of special tokens (" +
                      std::to_string(specials.size()) + ")");
  if (!(semantic_fraction > 0.0 && semantic_fraction <= 1.0))
    throw ConfigError("semantic_fraction must be in (0, 1]");
  if (min_frequency < 1) throw ConfigError("min_frequency must be >= 1");
  if (min_stem_length < 1) throw ConfigError("min_stem_length must be >= 1");
  if (!(character_coverage > 0.0 && character_coverage <= 1.0))
    throw ConfigError("character_coverage must be in (0, 1]");
}

int TrainerConfig::semantic_capacity() const {
  return static_cast<int>(std::lround(semantic_fraction * regular_capacity()));
}

std::vector<CandidateStats> populate_semantic_segment(const WordFrequencyTable& freq,
                                                      const TrainerConfig& config) {
  const auto capacity = static_cast<std::size_t>(std::max(0, config.semantic_capacity()));
  const std::unordered_set<std::string_view> specials(config.specials.begin(),
                                                      config.specials.end());
  std::vector<CandidateStats> candidates;
  std::unordered_map<std::string, std::size_t, StringHash, std::equal_to<>> index;

  auto credit = [&](std::string token, std::uint64_t count) {
    if (specials.count(token)) return;
    if (auto it = index.find(token); it != index.end()) {
      candidates[it->second].occurrence_mass += count;
    } else if (candidates.size() < capacity) {
      index.emplace(token, candidates.size());
      candidates.push_back({std::move(token), count});
    }
  };

  for (const auto& wc : freq.sorted_by_frequency()) {
    if (wc.count < static_cast<std::uint64_t>(config.min_frequency)) break;
    if (auto split = split_stem_suffix(wc.word, config.min_stem_length)) {
      credit(std::move(split->stem), wc.count);
      credit(std::string(kContinuationMarker) + split->suffix, wc.count);
    } else {
      credit(wc.word, wc.count);
    }
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const CandidateStats& a, const CandidateStats& b) {
              if (a.occurrence_mass != b.occurrence_mass)
                return a.occurrence_mass > b.occurrence_mass;
              return a.token < b.token;
            });
  return candidates;
}

ResidualSegment train_bpe_residual(const WordFrequencyTable& freq,
                                   std::span<const CandidateStats> semantic,
                                   const TrainerConfig& config) {
  ResidualSegment out;
  const int regular = config.regular_capacity();
  // f = 1 reserves the whole vocabulary for the semantic segment.
  std::size_t budget = 0;
  if (config.semantic_fraction < 1.0 && regular > static_cast<int>(semantic.size()))
    budget = static_cast<std::size_t>(regular) - semantic.size();

  std::vector<TokenSpec> specs;
  std::unordered_set<std::string> semantic_tokens;
  for (const auto& c : semantic) {
    specs.push_back({c.token, Segment::kSemantic, 0.0});
    semantic_tokens.insert(c.token);
  }
  const Vocabulary semantic_vocab = Vocabulary::build(std::move(specs));

  std::vector<WordCount> residual;
  std::vector<std::int32_t> scratch;
  for (auto& wc : freq.sorted_by_frequency()) {
    scratch.clear();
    if (!segment_word(wc.word, semantic_vocab, kDefaultMaxWordChars, scratch))
      residual.push_back(std::move(wc));
  }
  out.residual_words = residual.size();
  if (budget == 0) return out;

  const Alphabet alphabet = select_alphabet(freq, config.character_coverage);
  for (const auto& t : alphabet.tokens) {
    if (out.tokens.size() >= budget) break;
    if (semantic_tokens.count(t.token)) continue;
    out.tokens.push_back(t);
  }
  out.alphabet_tokens = out.tokens.size();

  const BpeMerges merges =
      learn_merges(residual, alphabet, budget - out.tokens.size(),
                   [&](std::string_view token) {
                     return semantic_tokens.count(std::string(token)) > 0;
                   });
  out.tokens.insert(out.tokens.end(), merges.tokens.begin(), merges.tokens.end());
  return out;
}

std::vector<double> compute_scores(std::span<const CandidateStats> candidates) {
  long double total = 0;
  for (const auto& c : candidates) total += c.occurrence_mass;
  if (!(total > 0)) throw std::invalid_argument("compute_scores: total mass must be positive");
  std::vector<double> scores;
  scores.reserve(candidates.size());
  for (const auto& c : candidates)
    scores.push_back(static_cast<double>(std::log(c.occurrence_mass / total)));
  return scores;
}

std::string TrainingSummary::render() const {
  char fraction[32];
  std::snprintf(fraction, sizeof(fraction), "%.6f", realized_fraction);
  std::ostringstream os;
  os << "vocab_size: " << vocab_size << '\n'
     << "specials: " << specials << '\n'
     << "semantic_tokens: " << semantic_tokens << '\n'
     << "residual_tokens: " << residual_tokens << '\n'
     << "alphabet_tokens: " << alphabet_tokens << '\n'
     << "residual_words: " << residual_words << '\n'
     << "distinct_words: " << distinct_words << '\n'
     << "total_words: " << total_words << '\n'
     << "realized_fraction: " << fraction << '\n';
  return os.str();
}

TrainingResult train_from_table(const WordFrequencyTable& freq, const TrainerConfig& config) {
  config.validate();
  if (freq.empty()) throw Error("cannot train on an empty corpus");

  const std::vector<CandidateStats> semantic = populate_semantic_segment(freq, config);
  const ResidualSegment residual = train_bpe_residual(freq, semantic, config);

  std::vector<CandidateStats> all = semantic;
  all.insert(all.end(), residual.tokens.begin(), residual.tokens.end());
  std::vector<TokenSpec> specs;
  if (!all.empty()) {
    const std::vector<double> scores = compute_scores(all);
    specs.reserve(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      specs.push_back({all[i].token,
                       i < semantic.size() ? Segment::kSemantic : Segment::kResidual,
                       scores[i]});
    }
  }

  TrainingResult result{Vocabulary::build(config.specials, std::move(specs)), {}};
  TrainingSummary& s = result.summary;
  s.vocab_size = result.vocab.size();
  s.specials = result.vocab.num_specials();
  s.semantic_tokens = result.vocab.num_semantic();
  s.residual_tokens = result.vocab.num_residual();
  s.alphabet_tokens = residual.alphabet_tokens;
  s.residual_words = residual.residual_words;
  s.distinct_words = freq.size();
  s.total_words = freq.total();
  s.realized_fraction = result.vocab.semantic_fraction();
  return result;
}

Vocabulary train(std::istream& corpus, const TrainerConfig& config) {
  config.validate();
  return train_from_table(build_frequency_table(corpus, config.normalization), config).vocab;
}

}  // namespace semtok
