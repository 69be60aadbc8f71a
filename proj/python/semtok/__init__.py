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
"""Semantic subword tokenizer."""

from semtok._core import (
    ConfigError,
    DecodeError,
    Error,
    IoError,
    ModelParseError,
    TrainerConfig,
    Vocabulary,
    WordFrequencyTable,
    compare,
    evaluate,
    normalize_text,
    split_stem_suffix,
    split_words,
    stem,
    train,
    train_bpe,
)

__all__ = [
    "ConfigError",
    "DecodeError",
    "Error",
    "IoError",
    "ModelParseError",
    "TrainerConfig",
    "Vocabulary",
    "WordFrequencyTable",
    "compare",
    "evaluate",
    "normalize_text",
    "split_stem_suffix",
    "split_words",
    "stem",
    "train",
    "train_bpe",
]
