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

from __future__ import annotations

from dataclasses import dataclass
import logging

import numpy as np

from simdsl.const import DEFAULT_BEAM_WIDTH, DEFAULT_MAX_LEN, DEFAULT_N
from simdsl.dsl.printer import format_lexemes
from simdsl.exceptions import ConfigurationError

from .abstract import PolicyModel
from .vocabulary import Query

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BeamCandidate:
    """
    A decoded sequence.

    `token_ids` never includes EOS; `finished` says whether EOS was emitted
    (and counted in `logprob`) or the length cap was hit first.
    """

    token_ids: tuple[int, ...]
    tokens: tuple[str, ...]
    logprob: float
    finished: bool

    @property
    def source(self) -> str:
        return format_lexemes(self.tokens)


def search(
    model: PolicyModel,
    query: Query,
    beam_width: int = DEFAULT_BEAM_WIDTH,
    n_return: int = DEFAULT_N,
    max_len: int = DEFAULT_MAX_LEN,
) -> list[BeamCandidate]:
    """Beam search for a prepared query; see `beam_search`."""
    if not 1 <= n_return <= beam_width:
        raise ConfigurationError(
            f"need beam_width >= n_return >= 1, got {beam_width} and {n_return}"
        )
    if max_len < 1:
        raise ConfigurationError(f"max_len must be >= 1, got {max_len}")

    vocabulary = model.vocabulary
    eos = vocabulary.eos_id

    live: list[tuple[tuple[int, ...], float]] = [((), 0.0)]
    finished: list[tuple[tuple[int, ...], float]] = []

    for _ in range(max_len):
        log_dists = model.next_log_dists(query, [ids for ids, _ in live])
        totals = np.array([logprob for _, logprob in live])[:, np.newaxis] + log_dists

        ranks, token_ids = np.nonzero(np.isfinite(totals))
        scores = totals[ranks, token_ids]
        # Highest score first, then older beam, then lower token id.
        order = np.lexsort((token_ids, ranks, -scores))[:beam_width]

        expanded = []
        for index in order:
            rank, token_id = int(ranks[index]), int(token_ids[index])
            score = float(scores[index])
            if token_id == eos:
                finished.append((live[rank][0], score))
            else:
                expanded.append((live[rank][0] + (token_id,), score))
        live = expanded

        if not live:
            break
        if len(finished) >= n_return:
            kth_best = sorted(score for _, score in finished)[-n_return]
            # Scores only go down as tokens are appended.
            if live[0][1] < kth_best:
                break

    results = [(ids, score, True) for ids, score in finished]
    results += [(ids, score, False) for ids, score in live]
    results.sort(key=lambda item: (-item[1], not item[2], item[0]))

    return [
        BeamCandidate(
            token_ids=ids,
            tokens=tuple(vocabulary.decode(ids, query)),
            logprob=score,
            finished=done,
        )
        for ids, score, done in results[:n_return]
    ]


def beam_search(
    model: PolicyModel,
    context: str,
    question: str,
    beam_width: int = DEFAULT_BEAM_WIDTH,
    n_return: int = DEFAULT_N,
    max_len: int = DEFAULT_MAX_LEN,
) -> list[BeamCandidate]:
    """
    Length-capped beam search from the start of the sequence.

    Keeps the `beam_width` best expansions per step; a hypothesis ends when
    it emits EOS or reaches `max_len` tokens (EOS included). Returns at most
    `n_return` candidates by total log-probability, best first. Ties are
    broken by beam rank, then token id, so the result is deterministic.
    """
    return search(
        model, model.vocabulary.query(context, question), beam_width, n_return, max_len
    )
