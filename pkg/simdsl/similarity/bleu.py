#
# Copyright 2026 simdsl team
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
"""
Sentence BLEU over program lexemes.

Programs are short, so unsmoothed 4-gram BLEU is mostly zero. We use
add-one smoothing on the numerator and denominator of every order >= 2
(sacrebleu's `add-k` with k=1) plus effective order, uniform weights and
the standard brevity penalty exp(1 - ref_len / cand_len).
"""
from __future__ import annotations

from collections.abc import Sequence
import threading

from sacrebleu.metrics import BLEU

from simdsl.const import DEFAULT_BLEU_MAX_ORDER
from simdsl.exceptions import ConfigurationError

_local = threading.local()


def _scorer(max_order: int) -> BLEU:
    scorers: dict[int, BLEU] = getattr(_local, "scorers", None) or {}
    if max_order not in scorers:
        scorers[max_order] = BLEU(
            tokenize="none",
            smooth_method="add-k",
            smooth_value=1,
            max_ngram_order=max_order,
            effective_order=True,
        )
        _local.scorers = scorers
    return scorers[max_order]


def bleu(
    reference_tokens: Sequence[str],
    candidate_tokens: Sequence[str],
    max_order: int = DEFAULT_BLEU_MAX_ORDER,
) -> float:
    """
    Smoothed sentence BLEU in [0, 1].

    bleu(["a", "b", "c", "d"], ["a", "b", "c", "e"]) is about 0.6580
    """
    if max_order < 1:
        raise ConfigurationError(f"BLEU max order must be >= 1, got {max_order}")

    if not candidate_tokens or not reference_tokens:
        return 0.0
    if list(candidate_tokens) == list(reference_tokens):
        return 1.0

    result = _scorer(max_order).sentence_score(
        " ".join(candidate_tokens), [" ".join(reference_tokens)]
    )
    return min(1.0, max(0.0, result.score / 100.0))
