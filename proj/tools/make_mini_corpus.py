#!/usr/bin/env python3
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
"""Rebuilds tests/data/mini_corpus.txt from the U.S. State of the Union texts.

The addresses are public-domain U.S. government works. They are distributed
on npm as @stdlib/datasets-sotu (pinned below). Each address is split into
sentences and written one sentence per line, in chronological file order.

    npm pack @stdlib/datasets-sotu@0.2.3
    tar xzf stdlib-datasets-sotu-0.2.3.tgz
    python3 tools/make_mini_corpus.py package/data tests/data/mini_corpus.txt
"""

import pathlib
import re
import sys

PINNED_PACKAGE = "@stdlib/datasets-sotu@0.2.3"
SENTENCE_END = re.compile(r"(?<=[.!?])\s+(?=[\"'(\[]?[A-Z0-9])")


def main(argv):
    if len(argv) != 3:
        sys.stderr.write(__doc__)
        return 1
    src = pathlib.Path(argv[1])
    dst = pathlib.Path(argv[2])
    lines = []
    for path in sorted(src.glob("*.txt")):
        text = path.read_text(encoding="utf-8")
        text = " ".join(text.split())
        for sentence in SENTENCE_END.split(text):
            sentence = sentence.strip()
            if sentence:
                lines.append(sentence)
    dst.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"{dst}: {len(lines)} lines from {PINNED_PACKAGE}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
