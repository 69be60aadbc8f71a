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

#include "semtok/cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "semtok/bpe.h"
#include "semtok/codec.h"
#include "semtok/corpus.h"
#include "semtok/error.h"
#include "semtok/metrics.h"
#include "semtok/trainer.h"
#include "semtok/vocab.h"

namespace semtok::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::vector<std::string> inputs;
  std::string model_prefix;
  int vocab_size = 8192;
  double semantic_fraction = 0.9;
  double character_coverage = 0.9999;
  int min_frequency = 2;
  int min_stem_length = kDefaultMinStemLength;
  bool lowercase = true;
  std::string model;
  std::string baseline;
  bool output_ids = false;
  bool input_ids = false;
  int max_pieces = 2;
  std::string format = "text";
  std::vector<double> sweep;
};

TrainerConfig trainer_config(const Options& o) {
  TrainerConfig c;
  c.vocab_size = o.vocab_size;
  c.semantic_fraction = o.semantic_fraction;
  c.character_coverage = o.character_coverage;
  c.min_frequency = o.min_frequency;
  c.min_stem_length = o.min_stem_length;
  c.normalization.lowercase = o.lowercase;
  return c;
}

NormalizationConfig normalization(const Options& o) {
  NormalizationConfig n;
  n.lowercase = o.lowercase;
  return n;
}

std::vector<fs::path> paths(const std::vector<std::string>& inputs) {
  return {inputs.begin(), inputs.end()};
}

// Calls fn(line) for every line of the --input files, or of `in` when none.
template <typename Fn>
void for_each_input_line(const Options& o, std::istream& in, Fn&& fn) {
  std::string line;
  if (o.inputs.empty()) {
    while (std::getline(in, line)) fn(line);
    return;
  }
  for (const auto& path : expand_inputs(paths(o.inputs))) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError(path.string(), "cannot open for reading");
    while (std::getline(file, line)) fn(line);
  }
}

void write_model_files(const Vocabulary& vocab, const std::string& prefix, std::ostream& out) {
  const fs::path model = prefix + ".model";
  const fs::path bert = prefix + ".vocab.txt";
  save_model(vocab, model);
  save_bert_vocab(vocab, bert);
  out << "model: " << model.string() << '\n' << "vocab: " << bert.string() << '\n';
}

void cmd_train(const Options& o, std::ostream& out) {
  const TrainerConfig config = trainer_config(o);
  config.validate();
  const WordFrequencyTable freq = build_frequency_table(paths(o.inputs), config.normalization);
  const TrainingResult result = train_from_table(freq, config);
  write_model_files(result.vocab, o.model_prefix, out);
  out << result.summary.render();
}

void cmd_train_bpe(const Options& o, std::ostream& out) {
  const TrainerConfig config = trainer_config(o);
  const WordFrequencyTable freq = build_frequency_table(paths(o.inputs), config.normalization);
  const BpeModel model = train_bpe_model(freq, o.vocab_size, config);
  write_model_files(model.vocab, o.model_prefix, out);
  out << "vocab_size: " << model.vocab.size() << '\n'
      << "merges: " << model.merges.size() << '\n';
}

void cmd_encode(const Options& o, std::istream& in, std::ostream& out) {
  const Vocabulary vocab = load_model(o.model);
  const NormalizationConfig norm = normalization(o);
  for_each_input_line(o, in, [&](const std::string& line) {
    const Encoding enc = encode_text(line, vocab, norm);
    for (std::size_t i = 0; i < enc.ids.size(); ++i) {
      if (i) out << ' ';
      if (o.output_ids) {
        out << enc.ids[i];
      } else {
        out << enc.pieces[i];
      }
    }
    out << '\n';
  });
}

void cmd_decode(const Options& o, std::istream& in, std::ostream& out) {
  const Vocabulary vocab = load_model(o.model);
  for_each_input_line(o, in, [&](const std::string& line) {
    std::istringstream fields(line);
    std::vector<std::int32_t> ids;
    std::string field;
    while (fields >> field) {
      if (o.input_ids) {
        std::int32_t id = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), id);
        if (ec != std::errc() || ptr != field.data() + field.size())
          throw Error("not a token id: '" + field + "'");
        ids.push_back(id);
      } else {
        const auto id = vocab.lookup(field);
        if (!id) throw Error("unknown piece: '" + field + "'");
        ids.push_back(*id);
      }
    }
    out << decode(ids, vocab) << '\n';
  });
}

void cmd_analyze(const Options& o, std::ostream& out) {
  const TrainerConfig config = trainer_config(o);
  const WordFrequencyTable freq = build_frequency_table(paths(o.inputs), config.normalization);
  if (!o.sweep.empty()) {
    out << render_tsv(sweep_semantic_fraction(freq, config, o.sweep, o.max_pieces));
    return;
  }
  const Vocabulary vocab = load_model(o.model);
  const EfficiencyReport report = evaluate(vocab, freq, o.max_pieces, o.min_stem_length);
  out << (o.format == "tsv" ? render_tsv(report) : render_text(report));
}

void cmd_compare(const Options& o, std::ostream& out) {
  const Vocabulary model = load_model(o.model);
  const Vocabulary baseline = load_model(o.baseline);
  const WordFrequencyTable freq = build_frequency_table(paths(o.inputs), normalization(o));
  const ComparisonReport report = compare_vocabularies(model, baseline, freq, o.max_pieces);
  out << (o.format == "tsv" ? render_tsv(report) : render_text(report));
}

void add_input(CLI::App* cmd, Options& o, bool required) {
  auto* opt = cmd->add_option("--input", o.inputs, "Corpus files or directories (comma separated)")
                  ->delimiter(',');
  if (required) opt->required();
}

void add_lowercase(CLI::App* cmd, Options& o) {
  cmd->add_option("--lowercase", o.lowercase, "Lowercase text during normalization")
      ->capture_default_str();
}

void add_training_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--vocab-size", o.vocab_size, "Vocabulary size including special tokens")
      ->capture_default_str();
  cmd->add_option("--character-coverage", o.character_coverage,
                  "Character mass guaranteed as single-character tokens")
      ->capture_default_str();
  add_lowercase(cmd, o);
}

void add_semantic_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--semantic-fraction", o.semantic_fraction,
                  "Share of regular tokens reserved for stems and suffixes")
      ->capture_default_str();
  cmd->add_option("--min-frequency", o.min_frequency,
                  "Minimum word count for the semantic segment")
      ->capture_default_str();
  cmd->add_option("--min-stem-length", o.min_stem_length, "Minimum stem length")
      ->capture_default_str();
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"text", "tsv"}))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Semantic subword tokenizer", "semtok"};
  app.require_subcommand(1);

  auto* train = app.add_subcommand("train", "Train a two-segment semantic vocabulary");
  add_input(train, o, true);
  train->add_option("--model-prefix", o.model_prefix, "Writes <prefix>.model and <prefix>.vocab.txt")
      ->required();
  add_training_flags(train, o);
  add_semantic_flags(train, o);

  auto* train_bpe = app.add_subcommand("train-bpe", "Train a BPE baseline vocabulary");
  add_input(train_bpe, o, true);
  train_bpe->add_option("--model-prefix", o.model_prefix, "Output prefix")->required();
  add_training_flags(train_bpe, o);

  auto* encode = app.add_subcommand("encode", "Encode lines of text");
  encode->add_option("--model", o.model, "Model file")->required();
  encode->add_flag("--output-ids", o.output_ids, "Print token ids instead of pieces");
  add_input(encode, o, false);
  add_lowercase(encode, o);

  auto* decode_cmd = app.add_subcommand("decode", "Decode lines of pieces or ids");
  decode_cmd->add_option("--model", o.model, "Model file")->required();
  decode_cmd->add_flag("--input-ids", o.input_ids, "Read token ids instead of pieces");
  add_input(decode_cmd, o, false);

  auto* analyze = app.add_subcommand("analyze", "Efficiency report for a vocabulary");
  auto* analyze_model = analyze->add_option("--model", o.model, "Model file");
  add_input(analyze, o, true);
  analyze->add_option("--max-pieces", o.max_pieces, "Piece limit for wordform coverage")
      ->capture_default_str();
  auto* sweep = analyze->add_option("--sweep", o.sweep,
                                    "Train and report at each semantic fraction instead")
                    ->delimiter(',');
  analyze_model->excludes(sweep);
  add_training_flags(analyze, o);
  add_semantic_flags(analyze, o);
  add_format(analyze, o);

  auto* compare = app.add_subcommand("compare", "Compare a vocabulary against a baseline");
  compare->add_option("--model", o.model, "Model file")->required();
  compare->add_option("--baseline", o.baseline, "Baseline model file")->required();
  add_input(compare, o, true);
  compare->add_option("--max-pieces", o.max_pieces, "Piece limit for wordform coverage")
      ->capture_default_str();
  add_lowercase(compare, o);
  add_format(compare, o);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("semtok");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (analyze->parsed() && o.model.empty() && o.sweep.empty())
      throw CLI::RequiredError("analyze needs --model or --sweep");
    if (o.max_pieces < 1) throw CLI::ValidationError("--max-pieces must be >= 1");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "semtok: usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (train->parsed()) cmd_train(o, out);
    else if (train_bpe->parsed()) cmd_train_bpe(o, out);
    else if (encode->parsed()) cmd_encode(o, in, out);
    else if (decode_cmd->parsed()) cmd_decode(o, in, out);
    else if (analyze->parsed()) cmd_analyze(o, out);
    else if (compare->parsed()) cmd_compare(o, out);
    out.flush();
  } catch (const ConfigError& e) {
    err << "semtok: configuration error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "semtok: error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace semtok::cli
