# Copyright 2026 The semtok Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

import semtok

DOCS = [
    "The condition of the conditions is conditional.",
    "Advise the advised advisers; conditioning matters.",
    "Conditioned air, conditional terms and the conditions.",
]

TABLE4 = ["condit", "##ion", "##ions", "##ioning", "##ioned", "##ional",
          "##ioner", "##ionality", "##ionable", "##ionally"]


def test_stemmer():
    assert semtok.stem("advise") == "advis"
    assert semtok.stem("condition") == "condit"
    assert semtok.split_stem_suffix("conditioning") == ("condit", "ioning")
    assert semtok.split_stem_suffix("the") is None


def test_normalize_and_split():
    assert semtok.normalize_text("Hello WORLD") == "hello world"
    assert semtok.split_words("hi, there") == ["hi", ",", "there"]
    with pytest.raises(semtok.DecodeError):
        semtok.normalize_text(b"\xff")


def test_table4_encoding():
    vocab = semtok.Vocabulary.from_tokens(TABLE4)
    assert vocab.encode_word("conditionality") == ["condit", "##ionality"]
    ids, pieces = vocab.encode("Condition conditions")
    assert pieces == ["condit", "##ion", "condit", "##ions"]
    assert vocab.decode(ids) == "condition conditions"


def test_train_save_load(tmp_path):
    freq = semtok.WordFrequencyTable.from_documents(DOCS)
    assert freq.count("the") == 4
    config = semtok.TrainerConfig(vocab_size=60, min_frequency=1)
    vocab, summary = semtok.train(freq, config)
    assert "semantic_tokens:" in summary
    assert len(vocab) <= 60
    assert vocab.encode_word("conditions") == ["condit", "##ions"]
    path = tmp_path / "m.model"
    vocab.save(path)
    assert semtok.Vocabulary.load(path) == vocab
    assert semtok.Vocabulary.from_string(vocab.serialize()) == vocab


def test_metrics_and_baseline():
    freq = semtok.WordFrequencyTable.from_documents(DOCS)
    vocab, _ = semtok.train(freq, semtok.TrainerConfig(vocab_size=60, min_frequency=1))
    baseline = semtok.train_bpe(freq, 60)
    report = semtok.evaluate(vocab, freq)
    assert report["distinct_words"] == len(freq)
    assert report["avg_pieces"] >= 1.0
    assert semtok.compare(vocab, baseline, freq).startswith("field\tmodel\tbaseline\tdelta\n")


def test_errors(tmp_path):
    with pytest.raises(semtok.ConfigError):
        semtok.TrainerConfig(vocab_size=3).validate()
    with pytest.raises(semtok.IoError):
        semtok.Vocabulary.load(tmp_path / "missing.model")
    with pytest.raises(semtok.ModelParseError):
        semtok.Vocabulary.from_string("")
