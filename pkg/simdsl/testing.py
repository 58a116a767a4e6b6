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

from collections import defaultdict
from collections.abc import Iterable, Sequence
import logging
import math

import numpy as np

from simdsl.dataset import QAExample
from simdsl.dsl import program_tokens
from simdsl.policy import PolicyModel, PolicyTarget, Query, Vocabulary

_LOGGER = logging.getLogger(__name__)


def vocabulary_for(
    programs: Iterable[tuple[str, str, str]], copy_slots: int = 12
) -> Vocabulary:
    """A vocabulary covering (context, question, program source) triples."""
    return Vocabulary.build(
        (
            (program_tokens(source), Query(context, question))
            for context, question, source in programs
        ),
        copy_slots=copy_slots,
    )


class FakePolicy(PolicyModel):
    """
    A fixed mixture over whole programs, the same for every query.

    Each program gets probability weight / sum(weights). A prefix that no
    program continues puts all of its mass on EOS. Updates change nothing.
    """

    def __init__(
        self, vocabulary: Vocabulary, programs: Sequence[tuple[str, float]] = ()
    ) -> None:
        self.vocabulary = vocabulary
        self.programs = list(programs)
        self.updates = 0

    def programs_for(self, query: Query) -> Sequence[tuple[str, float]]:
        return self.programs

    def _sequences(self, query: Query) -> list[tuple[tuple[int, ...], float]]:
        eos = self.vocabulary.eos_id
        return [
            (
                (*self.vocabulary.encode(program_tokens(source), query), eos),
                weight,
            )
            for source, weight in self.programs_for(query)
        ]

    def next_log_dists(
        self, query: Query, prefixes: Sequence[Sequence[int]]
    ) -> np.ndarray:
        sequences = self._sequences(query)
        out = np.full((len(prefixes), len(self.vocabulary)), -np.inf)
        for row, prefix in enumerate(prefixes):
            prefix = tuple(prefix)
            mass: dict[int, float] = defaultdict(float)
            for sequence, weight in sequences:
                if len(sequence) > len(prefix) and sequence[: len(prefix)] == prefix:
                    mass[sequence[len(prefix)]] += weight
            total = sum(mass.values())
            if not total:
                out[row, self.vocabulary.eos_id] = 0.0
                continue
            for token_id, weight in mass.items():
                out[row, token_id] = math.log(weight / total)
        return out

    def _loss(self, batch: Sequence[PolicyTarget], weighted: bool) -> float:
        if not batch:
            return 0.0
        loss = 0.0
        for target in batch:
            weight = target.weight if weighted else 1.0
            if weight:
                loss -= weight * self.sequence_logprob(target.query, target.token_ids)
        return loss / len(batch)

    def mle_update(self, batch: Sequence[PolicyTarget], learning_rate: float) -> float:
        self.updates += 1
        return self._loss(batch, weighted=False)

    def reinforce_update(
        self, batch: Sequence[PolicyTarget], learning_rate: float
    ) -> float:
        self.updates += 1
        return self._loss(batch, weighted=True)

    def clone(self) -> FakePolicy:
        return FakePolicy(self.vocabulary, self.programs)


class OraclePolicy(FakePolicy):
    """Emits each example's reference program with probability 1."""

    def __init__(self, vocabulary: Vocabulary, examples: Iterable[QAExample]) -> None:
        super().__init__(vocabulary)
        self.examples = list(examples)
        self._references = {
            (example.context, example.question): example.reference_program
            for example in self.examples
        }

    @classmethod
    def for_examples(cls, examples: Sequence[QAExample]) -> OraclePolicy:
        vocabulary = vocabulary_for(
            (example.context, example.question, example.reference_program)
            for example in examples
        )
        return cls(vocabulary, examples)

    def programs_for(self, query: Query) -> Sequence[tuple[str, float]]:
        reference = self._references.get((query.context, query.question))
        if reference is None:
            _LOGGER.debug("Oracle has no reference for %r", query.question)
            return []
        return [(reference, 1.0)]

    def clone(self) -> OraclePolicy:
        return OraclePolicy(self.vocabulary, self.examples)
