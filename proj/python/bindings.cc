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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <filesystem>
#include <string>
#include <vector>

#include "semtok/bpe.h"
#include "semtok/codec.h"
#include "semtok/corpus.h"
#include "semtok/error.h"
#include "semtok/metrics.h"
#include "semtok/stemmer.h"
#include "semtok/trainer.h"
#include "semtok/vocab.h"

namespace py = pybind11;
using namespace semtok;

namespace {

WordFrequencyTable table_from(const std::vector<std::string>& documents, bool lowercase) {
  NormalizationConfig norm;
  norm.lowercase = lowercase;
  return build_frequency_table(documents, norm);
}

py::dict report_dict(const EfficiencyReport& r) {
  py::dict d;
  d["distinct_words"] = r.distinct_words;
  d["wordforms_le2"] = r.wordforms_le2;
  d["max_pieces"] = r.max_pieces;
  d["avg_pieces"] = r.avg_pieces;
  d["cov"] = r.cov;
  d["unk_word_rate"] = r.unk_word_rate;
  d["occurrence_unk_rate"] = r.occurrence_unk_rate;
  d["stem_usage_rate"] = r.stem_usage_rate;
  d["occurrence_avg_pieces"] = r.occurrence_avg_pieces;
  d["occurrence_cov"] = r.occurrence_cov;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Semantic subword tokenizer core";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DecodeError>(m, "DecodeError", base.ptr());
  py::register_exception<ModelParseError>(m, "ModelParseError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());

  m.def("normalize_text",
        [](const std::string& text, bool lowercase) {
          NormalizationConfig c;
          c.lowercase = lowercase;
          return normalize_text(text, c);
        },
        py::arg("text"), py::arg("lowercase") = true);
  m.def("split_words", [](const std::string& text) { return split_words(text); },
        py::arg("text"));
  m.def("stem", [](const std::string& word) { return stem(word); }, py::arg("word"));
  m.def("split_stem_suffix",
        [](const std::string& word, int min_stem_length) -> py::object {
          auto s = split_stem_suffix(word, min_stem_length);
          if (!s) return py::none();
          return py::make_tuple(s->stem, s->suffix);
        },
        py::arg("word"), py::arg("min_stem_length") = kDefaultMinStemLength);

  py::class_<WordFrequencyTable>(m, "WordFrequencyTable")
      .def(py::init<>())
      .def("add", [](WordFrequencyTable& t, const std::string& w, std::uint64_t c) { t.add(w, c); },
           py::arg("word"), py::arg("count") = 1)
      .def("count", [](const WordFrequencyTable& t, const std::string& w) { return t.count(w); })
      .def_property_readonly("total", &WordFrequencyTable::total)
      .def("__len__", &WordFrequencyTable::size)
      .def("most_common",
           [](const WordFrequencyTable& t) {
             std::vector<std::pair<std::string, std::uint64_t>> out;
             for (auto& wc : t.sorted_by_frequency()) out.emplace_back(std::move(wc.word), wc.count);
             return out;
           })
      .def_static("from_documents", &table_from, py::arg("documents"),
                  py::arg("lowercase") = true)
      .def_static("from_files",
                  [](const std::vector<std::filesystem::path>& paths, bool lowercase) {
                    NormalizationConfig norm;
                    norm.lowercase = lowercase;
                    return build_frequency_table(paths, norm);
                  },
                  py::arg("paths"), py::arg("lowercase") = true);

  py::class_<Vocabulary>(m, "Vocabulary")
      .def_static("load", &load_model, py::arg("path"))
      .def_static("from_string", [](const std::string& s) { return deserialize_model(s); })
      .def_static("from_tokens",
                  [](const std::vector<std::string>& tokens, bool with_specials) {
                    std::vector<TokenSpec> specs;
                    for (const auto& t : tokens) specs.push_back({t, Segment::kSemantic, 0.0});
                    if (!with_specials) return Vocabulary::build(std::move(specs));
                    return Vocabulary::build(default_special_tokens(), std::move(specs));
                  },
                  py::arg("tokens"), py::arg("with_specials") = true)
      .def("save", &save_model, py::arg("path"))
      .def("save_bert_vocab", &save_bert_vocab, py::arg("path"))
      .def("serialize", [](const Vocabulary& v) { return serialize_model(v); })
      .def("lookup", [](const Vocabulary& v, const std::string& t) { return v.lookup(t); })
      .def("token", [](const Vocabulary& v, std::int32_t id) { return v.at(id).token; })
      .def("tokens",
           [](const Vocabulary& v) {
             std::vector<std::string> out;
             for (const auto& e : v.entries()) out.push_back(e.token);
             return out;
           })
      .def_property_readonly("semantic_fraction", &Vocabulary::semantic_fraction)
      .def_property_readonly("num_semantic", &Vocabulary::num_semantic)
      .def_property_readonly("num_residual", &Vocabulary::num_residual)
      .def_property_readonly("num_specials", &Vocabulary::num_specials)
      .def("__len__", &Vocabulary::size)
      .def("__contains__",
           [](const Vocabulary& v, const std::string& t) { return v.lookup(t).has_value(); })
      .def("__eq__", [](const Vocabulary& a, const Vocabulary& b) { return a == b; })
      .def("encode_word",
           [](const Vocabulary& v, const std::string& w) { return encode_word(w, v); },
           py::arg("word"))
      .def("encode",
           [](const Vocabulary& v, const std::string& text, bool lowercase) {
             NormalizationConfig norm;
             norm.lowercase = lowercase;
             const Encoding e = encode_text(text, v, norm);
             return py::make_tuple(e.ids, e.pieces);
           },
           py::arg("text"), py::arg("lowercase") = true)
      .def("decode",
           [](const Vocabulary& v, const std::vector<std::int32_t>& ids) { return decode(ids, v); },
           py::arg("ids"));

  py::class_<TrainerConfig>(m, "TrainerConfig")
      .def(py::init([](int vocab_size, double semantic_fraction, int min_frequency,
                       int min_stem_length, double character_coverage, bool lowercase) {
             TrainerConfig c;
             c.vocab_size = vocab_size;
             c.semantic_fraction = semantic_fraction;
             c.min_frequency = min_frequency;
             c.min_stem_length = min_stem_length;
             c.character_coverage = character_coverage;
             c.normalization.lowercase = lowercase;
             return c;
           }),
           py::arg("vocab_size") = 8192, py::arg("semantic_fraction") = 0.9,
           py::arg("min_frequency") = 2, py::arg("min_stem_length") = kDefaultMinStemLength,
           py::arg("character_coverage") = 0.9999, py::arg("lowercase") = true)
      .def_readwrite("vocab_size", &TrainerConfig::vocab_size)
      .def_readwrite("semantic_fraction", &TrainerConfig::semantic_fraction)
      .def_readwrite("min_frequency", &TrainerConfig::min_frequency)
      .def_readwrite("min_stem_length", &TrainerConfig::min_stem_length)
      .def_readwrite("character_coverage", &TrainerConfig::character_coverage)
      .def("validate", &TrainerConfig::validate);

  m.def("train",
        [](const WordFrequencyTable& freq, const TrainerConfig& config) {
          TrainingResult r = [&] {
            py::gil_scoped_release release;
            return train_from_table(freq, config);
          }();
          return py::make_tuple(std::move(r.vocab), r.summary.render());
        },
        py::arg("freq"), py::arg("config") = TrainerConfig{},
        "Returns (vocabulary, summary text).");
  m.def("train_bpe",
        [](const WordFrequencyTable& freq, int vocab_size, const TrainerConfig& config) {
          py::gil_scoped_release release;
          return train_bpe(freq, vocab_size, config);
        },
        py::arg("freq"), py::arg("vocab_size"), py::arg("config") = TrainerConfig{});

  m.def("evaluate",
        [](const Vocabulary& v, const WordFrequencyTable& freq, int max_pieces) {
          return report_dict(evaluate(v, freq, max_pieces));
        },
        py::arg("vocab"), py::arg("freq"), py::arg("max_pieces") = 2);
  m.def("compare",
        [](const Vocabulary& model, const Vocabulary& baseline, const WordFrequencyTable& freq,
           int max_pieces) {
          return render_tsv(compare_vocabularies(model, baseline, freq, max_pieces));
        },
        py::arg("model"), py::arg("baseline"), py::arg("freq"), py::arg("max_pieces") = 2,
        "Comparison report as TSV.");
}
