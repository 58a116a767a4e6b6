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
from typing import Any

from simdsl.const import (
    DEFAULT_BLEU_MAX_ORDER,
    DEFAULT_GAMMA,
    DEFAULT_REAL_TOLERANCE,
)
from simdsl.dsl import parse, parse_source, program_tokens, tokenize
from simdsl.exceptions import ConfigurationError, LexError, ParseError
from simdsl.interpreter import State, execute, execute_and_get_state

from .bleu import bleu
from .semantic import SemanticScore, score_states

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RewardConfig:
    gamma: float = DEFAULT_GAMMA
    real_equality_tolerance: float = DEFAULT_REAL_TOLERANCE
    bleu_max_order: int = DEFAULT_BLEU_MAX_ORDER
    max_steps: int | None = None

    def __post_init__(self) -> None:
        if not 0.0 <= self.gamma <= 1.0:
            raise ConfigurationError(f"gamma must be in [0, 1], got {self.gamma}")
        if not self.real_equality_tolerance > 0:
            raise ConfigurationError(
                "real equality tolerance must be > 0, "
                f"got {self.real_equality_tolerance}"
            )
        if self.bleu_max_order < 1:
            raise ConfigurationError(
                f"BLEU max order must be >= 1, got {self.bleu_max_order}"
            )


@dataclass(frozen=True)
class SimilarityScores:
    q_syntactic: float
    q_semantic: float
    gamma: float
    q_combined: float
    t_max: int
    t_min: int
    matched_states: int
    parseable: bool = True
    executable: bool = False

    def as_dict(self) -> dict[str, Any]:
        return {
            "q_syntactic": self.q_syntactic,
            "q_semantic": self.q_semantic,
            "gamma": self.gamma,
            "q": self.q_combined,
            "matched": self.matched_states,
            "t_min": self.t_min,
            "t_max": self.t_max,
        }


def combine(q_syntactic: float, q_semantic: float, gamma: float) -> float:
    """Q = gamma * Q_syntactic + (1 - gamma) * Q_semantic."""
    return gamma * q_syntactic + (1.0 - gamma) * q_semantic


class RewardScorer:
    """
    Scores many candidates against one reference.

    The reference is lexed and executed once. Passing `semantic=False`
    withholds the reference trace, which leaves a pure BLEU reward
    scaled by gamma.
    """

    def __init__(
        self,
        reference_source: str,
        config: RewardConfig | None = None,
        semantic: bool = True,
    ) -> None:
        self.config = config or RewardConfig()
        self.reference_tokens = program_tokens(reference_source)
        self.reference_program = parse_source(reference_source)
        self.reference_states: list[State] | None = (
            execute_and_get_state(self.reference_program, self.config.max_steps)
            if semantic
            else None
        )

    def score(self, predicted_source: str) -> SimilarityScores:
        config = self.config
        reference_length = len(self.reference_states or ())

        try:
            tokens = tokenize(predicted_source)
        except LexError:
            logger.debug("Candidate does not lex: %r", predicted_source)
            return self._unparseable(0.0, reference_length)

        q_syntactic = bleu(
            self.reference_tokens,
            [token.lexeme for token in tokens],
            config.bleu_max_order,
        )

        try:
            predicted = parse(tokens, len(predicted_source.encode("utf-8")))
        except ParseError:
            logger.debug("Candidate does not parse: %r", predicted_source)
            return self._unparseable(q_syntactic, reference_length)

        outcome = execute(predicted, config.max_steps)
        if self.reference_states is None:
            semantic = SemanticScore(0.0, 0, 0, 0)
        else:
            semantic = score_states(
                self.reference_states,
                outcome.trace.states,
                config.real_equality_tolerance,
            )

        return SimilarityScores(
            q_syntactic=q_syntactic,
            q_semantic=semantic.q_semantic,
            gamma=config.gamma,
            q_combined=combine(q_syntactic, semantic.q_semantic, config.gamma),
            t_max=semantic.t_max,
            t_min=semantic.t_min,
            matched_states=semantic.matched,
            executable=outcome.returned,
        )

    def _unparseable(
        self, q_syntactic: float, reference_length: int
    ) -> SimilarityScores:
        gamma = self.config.gamma
        return SimilarityScores(
            q_syntactic=q_syntactic,
            q_semantic=0.0,
            gamma=gamma,
            q_combined=combine(q_syntactic, 0.0, gamma),
            t_max=reference_length,
            t_min=0,
            matched_states=0,
            parseable=False,
        )


def combined_reward(
    reference_source: str,
    predicted_source: str,
    config: RewardConfig | None = None,
) -> SimilarityScores:
    """
    Score a predicted program against a reference.

    An unlexable or unparseable prediction is not an error: it gets
    q_semantic = 0, q_syntactic on whatever lexes, and `parseable=False`.

    :raises LexError: if the reference does not lex
    :raises ParseError: if the reference does not parse
    """
    return RewardScorer(reference_source, config).score(predicted_source)
