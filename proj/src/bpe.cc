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

#include "semtok/bpe.h"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

#include "semtok/error.h"
#include "utf8.h"

namespace semtok {
namespace {

std::string continuation(std::string_view payload) {
  std::string t(kContinuationMarker);
  t += payload;
  return t;
}

std::string char_payload(char32_t c) {
  std::string s;
  utf8::append(s, c);
  return s;
}

// Incremental pair statistics over a fixed word list.
class MergeEngine {
 public:
  MergeEngine(std::span<const WordCount> words, const Alphabet& alphabet)
      : queue_(PairOrder{&symbols_}) {
    for (const auto& wc : words) {
      std::vector<std::int32_t> syms;
      bool covered = true;
      for (std::size_t pos = 0; pos < wc.word.size();) {
        const char32_t c = utf8::next(wc.word, pos);
        if (!alphabet.characters.count(c)) {
          covered = false;
          break;
        }
        syms.push_back(intern(char_payload(c)));
      }
      if (!covered || syms.size() < 2) continue;
      words_.push_back({std::move(syms), wc.count});
    }
    for (std::uint32_t w = 0; w < words_.size(); ++w) add_pairs(w);
    flush();
  }

  struct Merge {
    std::int32_t left;
    std::int32_t right;
    std::int32_t merged;
    std::uint64_t initial_mass;
    std::uint64_t continuation_mass;
  };

  // Applies the best pair, or returns false when none is left.
  bool step(Merge& out) {
    if (queue_.empty()) return false;
    const Entry best = *queue_.begin();
    const std::uint64_t key = pair_key(best.left, best.right);
    const std::int32_t merged = intern(symbols_[best.left] + symbols_[best.right]);
    out = {best.left, best.right, merged, 0, 0};

    const std::vector<std::uint32_t> affected(stats_[key].words.begin(),
                                              stats_[key].words.end());
    for (std::uint32_t w : affected) {
      remove_pairs(w);
      auto& syms = words_[w].syms;
      std::vector<std::int32_t> next;
      next.reserve(syms.size());
      for (std::size_t i = 0; i < syms.size();) {
        if (i + 1 < syms.size() && syms[i] == best.left && syms[i + 1] == best.right) {
          (next.empty() ? out.initial_mass : out.continuation_mass) += words_[w].count;
          next.push_back(merged);
          i += 2;
        } else {
          next.push_back(syms[i]);
          ++i;
        }
      }
      syms = std::move(next);
      add_pairs(w);
    }
    flush();
    return true;
  }

  const std::string& symbol(std::int32_t id) const { return symbols_[id]; }

 private:
  struct Word {
    std::vector<std::int32_t> syms;
    std::uint64_t count;
  };
  struct PairStat {
    std::uint64_t count = 0;
    std::unordered_set<std::uint32_t> words;
  };
  struct Entry {
    std::uint64_t count;
    std::int32_t left;
    std::int32_t right;
  };
  struct PairOrder {
    const std::vector<std::string>* symbols;
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.count != b.count) return a.count > b.count;
      const auto& s = *symbols;
      if (a.left != b.left) {
        if (int c = s[a.left].compare(s[b.left]); c != 0) return c < 0;
      }
      if (a.right != b.right) return s[a.right] < s[b.right];
      return false;
    }
  };

  static std::uint64_t pair_key(std::int32_t l, std::int32_t r) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(l)) << 32) |
           static_cast<std::uint32_t>(r);
  }
  static std::int32_t left_of(std::uint64_t key) { return static_cast<std::int32_t>(key >> 32); }
  static std::int32_t right_of(std::uint64_t key) {
    return static_cast<std::int32_t>(key & 0xFFFFFFFFu);
  }

  std::int32_t intern(std::string payload) {
    auto it = symbol_ids_.find(payload);
    if (it != symbol_ids_.end()) return it->second;
    const auto id = static_cast<std::int32_t>(symbols_.size());
    symbols_.push_back(payload);
    symbol_ids_.emplace(std::move(payload), id);
    return id;
  }

  void touch(std::uint64_t key, const PairStat& stat) { before_.try_emplace(key, stat.count); }

  void add_pairs(std::uint32_t w) {
    const auto& word = words_[w];
    for (std::size_t i = 0; i + 1 < word.syms.size(); ++i) {
      const auto key = pair_key(word.syms[i], word.syms[i + 1]);
      auto& stat = stats_[key];
      touch(key, stat);
      stat.count += word.count;
      stat.words.insert(w);
    }
  }

  void remove_pairs(std::uint32_t w) {
    const auto& word = words_[w];
    for (std::size_t i = 0; i + 1 < word.syms.size(); ++i) {
      const auto key = pair_key(word.syms[i], word.syms[i + 1]);
      auto& stat = stats_[key];
      touch(key, stat);
      stat.count -= word.count;
      stat.words.erase(w);
    }
  }

  // Moves every pair whose count changed to its new queue position.
  void flush() {
    for (const auto& [key, old_count] : before_) {
      if (old_count > 0) queue_.erase({old_count, left_of(key), right_of(key)});
      auto it = stats_.find(key);
      if (it->second.count > 0) {
        queue_.insert({it->second.count, left_of(key), right_of(key)});
      } else {
        stats_.erase(it);
      }
    }
    before_.clear();
  }

  std::vector<std::string> symbols_;
  std::unordered_map<std::string, std::int32_t, StringHash, std::equal_to<>> symbol_ids_;
  std::vector<Word> words_;
  std::unordered_map<std::uint64_t, PairStat> stats_;
  std::unordered_map<std::uint64_t, std::uint64_t> before_;
  std::set<Entry, PairOrder> queue_;
};

}  // namespace

Alphabet select_alphabet(const WordFrequencyTable& freq, double coverage) {
  struct Mass {
    std::uint64_t total = 0;
    std::uint64_t initial = 0;
    std::uint64_t continuation = 0;
  };
  std::map<char32_t, Mass> mass;
  std::uint64_t total = 0;
  for (const auto& [word, count] : freq.entries()) {
    bool first = true;
    for (std::size_t pos = 0; pos < word.size();) {
      Mass& m = mass[utf8::next(word, pos)];
      m.total += count;
      (first ? m.initial : m.continuation) += count;
      total += count;
      first = false;
    }
  }

  std::vector<std::pair<char32_t, Mass>> chars(mass.begin(), mass.end());
  std::stable_sort(chars.begin(), chars.end(), [](const auto& a, const auto& b) {
    return a.second.total > b.second.total;
  });

  Alphabet alphabet;
  const long double target = static_cast<long double>(coverage) * total;
  std::uint64_t covered = 0;
  for (const auto& [c, m] : chars) {
    if (covered > 0 && static_cast<long double>(covered) >= target) break;
    alphabet.characters.insert(c);
    covered += m.total;
    const std::string payload = char_payload(c);
    if (m.initial > 0) alphabet.tokens.push_back({payload, m.initial});
    if (m.continuation > 0) alphabet.tokens.push_back({continuation(payload), m.continuation});
  }
  std::sort(alphabet.tokens.begin(), alphabet.tokens.end(),
            [](const CandidateStats& a, const CandidateStats& b) {
              if (a.occurrence_mass != b.occurrence_mass)
                return a.occurrence_mass > b.occurrence_mass;
              return a.token < b.token;
            });
  return alphabet;
}

BpeMerges learn_merges(std::span<const WordCount> words, const Alphabet& alphabet,
                       std::size_t budget,
                       const std::function<bool(std::string_view)>& skip) {
  BpeMerges out;
  if (budget == 0) return out;
  std::unordered_set<std::string> emitted;
  for (const auto& t : alphabet.tokens) emitted.insert(t.token);

  MergeEngine engine(words, alphabet);
  MergeEngine::Merge m{};
  while (out.tokens.size() < budget && engine.step(m)) {
    out.rules.push_back({engine.symbol(m.left), continuation(engine.symbol(m.right)),
                         static_cast<int>(out.rules.size())});
    const std::string& payload = engine.symbol(m.merged);
    const std::pair<std::string, std::uint64_t> forms[] = {
        {payload, m.initial_mass}, {continuation(payload), m.continuation_mass}};
    for (const auto& [token, mass] : forms) {
      if (mass == 0 || out.tokens.size() >= budget) continue;
      if (emitted.count(token) || (skip && skip(token))) continue;
      emitted.insert(token);
      out.tokens.push_back({token, mass});
    }
  }
  return out;
}

BpeModel train_bpe_model(const WordFrequencyTable& freq, int vocab_size,
                         const TrainerConfig& config) {
  const Alphabet alphabet = select_alphabet(freq, config.character_coverage);
  const std::size_t fixed = config.specials.size() + alphabet.tokens.size();
  if (vocab_size < 0 || static_cast<std::size_t>(vocab_size) < fixed)
    throw ConfigError("vocab_size " + std::to_string(vocab_size) + " is too small for " +
                      std::to_string(config.specials.size()) + " special tokens plus an " +
                      std::to_string(alphabet.tokens.size()) + "-token alphabet");

  const auto words = freq.sorted_by_frequency();
  const BpeMerges merges =
      learn_merges(words, alphabet, static_cast<std::size_t>(vocab_size) - fixed);

  std::vector<CandidateStats> candidates = alphabet.tokens;
  candidates.insert(candidates.end(), merges.tokens.begin(), merges.tokens.end());
  const std::vector<double> scores = compute_scores(candidates);
  std::vector<TokenSpec> specs;
  specs.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    specs.push_back({candidates[i].token, Segment::kResidual, scores[i]});
  return {Vocabulary::build(config.specials, std::move(specs)), merges.rules};
}

Vocabulary train_bpe(const WordFrequencyTable& freq, int vocab_size,
                     const TrainerConfig& config) {
  return train_bpe_model(freq, vocab_size, config).vocab;
}

std::vector<std::string> apply_merges(std::string_view word,
                                      std::span<const MergeRule> rules,
                                      const Vocabulary* alphabet) {
  std::vector<std::string> pieces;  // payloads
  for (std::size_t pos = 0; pos < word.size();) {
    pieces.push_back(char_payload(utf8::next(word, pos)));
    if (alphabet != nullptr) {
      const auto& p = pieces.back();
      const bool present = pieces.size() == 1 ? alphabet->find_initial(p).has_value()
                                              : alphabet->find_continuation(p).has_value();
      if (!present) return {std::string(kUnkToken)};
    }
  }

  // TAB never occurs inside a token, so it separates the two halves.
  std::unordered_map<std::string, int> ranks;
  for (const auto& r : rules) {
    std::string key = r.left;
    key += '\t';
    key += token_payload(r.right);
    ranks.emplace(std::move(key), r.rank);
  }

  while (pieces.size() > 1) {
    int best = std::numeric_limits<int>::max();
    std::string best_left, best_right;
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
      auto it = ranks.find(pieces[i] + '\t' + pieces[i + 1]);
      if (it != ranks.end() && it->second < best) {
        best = it->second;
        best_left = pieces[i];
        best_right = pieces[i + 1];
      }
    }
    if (best == std::numeric_limits<int>::max()) break;
    std::vector<std::string> next;
    for (std::size_t i = 0; i < pieces.size();) {
      if (i + 1 < pieces.size() && pieces[i] == best_left && pieces[i + 1] == best_right) {
        next.push_back(pieces[i] + pieces[i + 1]);
        i += 2;
      } else {
        next.push_back(pieces[i]);
        ++i;
      }
    }
    pieces = std::move(next);
  }

  for (std::size_t i = 1; i < pieces.size(); ++i) pieces[i] = continuation(pieces[i]);
  return pieces;
}

}  // namespace semtok
