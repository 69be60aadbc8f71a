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

#include "semtok/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "semtok/stemmer.h"

namespace semtok {
namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

// Mean and percent CoV from weighted sums, computed in long double.
SubwordStats stats_from_sums(long double weight, long double sum, long double sum_sq) {
  if (weight <= 0) return {};
  const long double mean = sum / weight;
  long double var = sum_sq / weight - mean * mean;
  if (var < 0) var = 0;
  return {static_cast<double>(mean),
          mean > 0 ? static_cast<double>(std::sqrt(var) / mean * 100.0L) : 0.0};
}

struct Field {
  std::string name;
  std::function<std::string(const EfficiencyReport&)> value;
  std::function<std::string(const EfficiencyReport&, const EfficiencyReport&)> delta;
};

template <typename T>
std::string signed_delta(T a, T b) {
  const long long d = static_cast<long long>(a) - static_cast<long long>(b);
  return std::to_string(d);
}

const std::vector<Field>& fields() {
  static const std::vector<Field> kFields = [] {
    std::vector<Field> f;
    auto integer = [&f](std::string name, auto member) {
      f.push_back({std::move(name),
                   [member](const EfficiencyReport& r) { return std::to_string(r.*member); },
                   [member](const EfficiencyReport& a, const EfficiencyReport& b) {
                     return signed_delta(a.*member, b.*member);
                   }});
    };
    auto real = [&f](std::string name, double EfficiencyReport::*member) {
      f.push_back({std::move(name),
                   [member](const EfficiencyReport& r) { return fixed6(r.*member); },
                   [member](const EfficiencyReport& a, const EfficiencyReport& b) {
                     return fixed6(a.*member - b.*member);
                   }});
    };
    integer("distinct_words", &EfficiencyReport::distinct_words);
    integer("wordforms_le2", &EfficiencyReport::wordforms_le2);
    integer("max_pieces", &EfficiencyReport::max_pieces);
    real("avg_pieces", &EfficiencyReport::avg_pieces);
    real("cov", &EfficiencyReport::cov);
    real("unk_word_rate", &EfficiencyReport::unk_word_rate);
    real("occurrence_unk_rate", &EfficiencyReport::occurrence_unk_rate);
    real("stem_usage_rate", &EfficiencyReport::stem_usage_rate);
    real("occurrence_avg_pieces", &EfficiencyReport::occurrence_avg_pieces);
    real("occurrence_cov", &EfficiencyReport::occurrence_cov);
    return f;
  }();
  return kFields;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::size_t name_width() {
  std::size_t w = 0;
  for (const auto& f : fields()) w = std::max(w, f.name.size());
  return w;
}

template <typename T>
bool is_monotone(const std::vector<T>& xs) {
  bool up = true, down = true;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] < xs[i - 1]) up = false;
    if (xs[i] > xs[i - 1]) down = false;
  }
  return up || down;
}

}  // namespace

SubwordStats piece_count_stats(std::span<const std::uint64_t> counts) {
  long double sum = 0, sum_sq = 0;
  for (auto k : counts) {
    sum += k;
    sum_sq += static_cast<long double>(k) * k;
  }
  return stats_from_sums(counts.size(), sum, sum_sq);
}

EfficiencyReport evaluate(const Vocabulary& vocab, const WordFrequencyTable& freq,
                          int max_pieces, int min_stem_length) {
  EfficiencyReport r;
  r.max_pieces = max_pieces;
  r.distinct_words = freq.size();
  if (freq.empty()) return r;

  // Integer accumulators keep the result independent of visiting order.
  std::uint64_t unk_words = 0, unk_occurrences = 0;
  std::uint64_t piece_sum = 0, piece_sum_sq = 0;
  std::uint64_t stemmable = 0, stem_first = 0;
  unsigned __int128 w_sum = 0, w_sum_sq = 0;
  std::vector<std::int32_t> ids;
  for (const auto& [word, count] : freq.entries()) {
    ids.clear();
    const bool ok = segment_word(word, vocab, kDefaultMaxWordChars, ids);
    const std::uint64_t k = ok ? ids.size() : 1;
    if (!ok) {
      ++unk_words;
      unk_occurrences += count;
    } else if (k <= static_cast<std::uint64_t>(max_pieces)) {
      ++r.wordforms_le2;
    }
    piece_sum += k;
    piece_sum_sq += k * k;
    w_sum += static_cast<unsigned __int128>(count) * k;
    w_sum_sq += static_cast<unsigned __int128>(count) * k * k;
    if (auto split = split_stem_suffix(word, min_stem_length)) {
      ++stemmable;
      if (ok && vocab.at(ids.front()).token == split->stem) ++stem_first;
    }
  }

  const auto n = static_cast<long double>(freq.size());
  const auto total = static_cast<long double>(freq.total());
  const SubwordStats distinct = stats_from_sums(n, piece_sum, piece_sum_sq);
  const SubwordStats weighted = stats_from_sums(total, static_cast<long double>(w_sum),
                                                static_cast<long double>(w_sum_sq));
  r.avg_pieces = distinct.avg_pieces;
  r.cov = distinct.cov;
  r.occurrence_avg_pieces = weighted.avg_pieces;
  r.occurrence_cov = weighted.cov;
  r.unk_word_rate = static_cast<double>(unk_words / n);
  r.occurrence_unk_rate = static_cast<double>(unk_occurrences / total);
  r.stem_usage_rate =
      stemmable == 0 ? 0.0 : static_cast<double>(stem_first) / static_cast<double>(stemmable);
  return r;
}

std::uint64_t wordform_coverage(const Vocabulary& vocab, const WordFrequencyTable& freq,
                                int max_pieces) {
  std::uint64_t covered = 0;
  std::vector<std::int32_t> ids;
  for (const auto& [word, count] : freq.entries()) {
    ids.clear();
    if (segment_word(word, vocab, kDefaultMaxWordChars, ids) &&
        ids.size() <= static_cast<std::size_t>(max_pieces))
      ++covered;
  }
  return covered;
}

SubwordStats subword_stats(const Vocabulary& vocab, const WordFrequencyTable& freq) {
  const EfficiencyReport r = evaluate(vocab, freq);
  return {r.avg_pieces, r.cov};
}

UnkRates unk_rates(const Vocabulary& vocab, const WordFrequencyTable& freq) {
  const EfficiencyReport r = evaluate(vocab, freq);
  return {r.unk_word_rate, r.occurrence_unk_rate};
}

double stem_usage_rate(const Vocabulary& vocab, const WordFrequencyTable& freq,
                       int min_stem_length) {
  return evaluate(vocab, freq, 2, min_stem_length).stem_usage_rate;
}

std::string render_tsv(const EfficiencyReport& report) {
  std::string out;
  for (const auto& f : fields()) out += f.name + '\t' + f.value(report) + '\n';
  return out;
}

std::string render_text(const EfficiencyReport& report) {
  const std::size_t w = name_width() + 2;
  std::string out;
  for (const auto& f : fields()) out += pad(f.name, w) + f.value(report) + '\n';
  return out;
}

ComparisonReport compare_vocabularies(const Vocabulary& model, const Vocabulary& baseline,
                                      const WordFrequencyTable& freq, int max_pieces) {
  return {evaluate(model, freq, max_pieces), evaluate(baseline, freq, max_pieces)};
}

std::string render_tsv(const ComparisonReport& report) {
  std::string out = "field\tmodel\tbaseline\tdelta\n";
  for (const auto& f : fields()) {
    out += f.name + '\t' + f.value(report.model) + '\t' + f.value(report.baseline) + '\t' +
           f.delta(report.model, report.baseline) + '\n';
  }
  return out;
}

std::string render_text(const ComparisonReport& report) {
  const std::size_t w0 = name_width() + 2;
  constexpr std::size_t kCol = 16;
  std::string out = pad("field", w0) + pad("model", kCol) + pad("baseline", kCol) + "delta\n";
  for (const auto& f : fields()) {
    out += pad(f.name, w0) + pad(f.value(report.model), kCol) +
           pad(f.value(report.baseline), kCol) + f.delta(report.model, report.baseline) + '\n';
  }
  return out;
}

SweepReport sweep_semantic_fraction(const WordFrequencyTable& freq, const TrainerConfig& base,
                                    std::span<const double> fractions, int max_pieces) {
  std::vector<double> sorted(fractions.begin(), fractions.end());
  std::sort(sorted.begin(), sorted.end());
  SweepReport out;
  std::vector<double> unk, avg;
  std::vector<std::uint64_t> coverage;
  for (double f : sorted) {
    TrainerConfig config = base;
    config.semantic_fraction = f;
    const TrainingResult trained = train_from_table(freq, config);
    SweepRow row{f, trained.summary.realized_fraction,
                 evaluate(trained.vocab, freq, max_pieces, config.min_stem_length)};
    unk.push_back(row.report.occurrence_unk_rate);
    avg.push_back(row.report.avg_pieces);
    coverage.push_back(row.report.wordforms_le2);
    out.rows.push_back(std::move(row));
  }
  out.unk_monotone = is_monotone(unk);
  out.coverage_monotone = is_monotone(coverage);
  out.avg_pieces_monotone = is_monotone(avg);
  return out;
}

std::string render_tsv(const SweepReport& report) {
  std::string out = "semantic_fraction\trealized_fraction";
  for (const auto& f : fields()) out += '\t' + f.name;
  out += '\n';
  for (const auto& row : report.rows) {
    out += fixed6(row.semantic_fraction) + '\t' + fixed6(row.realized_fraction);
    for (const auto& f : fields()) out += '\t' + f.value(row.report);
    out += '\n';
  }
  auto yes_no = [](bool b) { return b ? std::string("yes") : std::string("no"); };
  out += "# monotone occurrence_unk_rate: " + yes_no(report.unk_monotone) + '\n';
  out += "# monotone wordforms_le2: " + yes_no(report.coverage_monotone) + '\n';
  out += "# monotone avg_pieces: " + yes_no(report.avg_pieces_monotone) + '\n';
  return out;
}

}  // namespace semtok
