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
Log-linear next-token policy.

score(v | query, prefix) = w . phi(query, prefix, v) with indicator features
for the candidate token v conjoined with:

 * nothing (a per-token bias)
 * the previous token
 * the previous two tokens
 * the position bucket min(t // 2, P - 1)
 * each hashed context/question word, mean-pooled
 * whether v stands for a number mentioned in the context or question

p(v) is the softmax of the scores over the tokens the query allows, so the
gradient of log p(y) is phi(y) - sum_v p(v) phi(v) and is computed exactly.
All blocks live in one flat float64 vector, which makes checkpoints and
finite-difference checks straightforward.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import asdict, dataclass
from functools import lru_cache
import logging
import math
from typing import Any
import zlib

import numpy as np

from simdsl.exceptions import ConfigurationError

from .abstract import PolicyModel, PolicyTarget
from .vocabulary import Query, Vocabulary

logger = logging.getLogger(__name__)

GRADIENT_CHECK_EPSILON = 1e-5


@dataclass(frozen=True)
class PolicyConfig:
    context_buckets: int = 64
    position_buckets: int = 32
    init_scale: float = 0.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.context_buckets < 1 or self.position_buckets < 1:
            raise ConfigurationError("feature bucket counts must be >= 1")
        if not self.init_scale >= 0:
            raise ConfigurationError(
                f"init_scale must be >= 0, got {self.init_scale}"
            )

    def as_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass
class _Blocks:
    unigram: np.ndarray
    bigram: np.ndarray
    trigram: np.ndarray
    position: np.ndarray
    context: np.ndarray
    mentioned: np.ndarray


@dataclass(frozen=True)
class _QueryFeatures:
    buckets: np.ndarray
    scale: float
    allowed: np.ndarray
    mentioned: np.ndarray


@lru_cache(maxsize=4096)
def _query_features(
    vocabulary: Vocabulary, query: Query, context_buckets: int
) -> _QueryFeatures:
    buckets = np.unique(
        np.array(
            [
                zlib.crc32(word.encode("utf-8")) % context_buckets
                for word in query.words
            ],
            dtype=np.intp,
        )
    )
    return _QueryFeatures(
        buckets=buckets,
        scale=1.0 / len(buckets) if len(buckets) else 0.0,
        allowed=vocabulary.allowed_mask(query),
        mentioned=vocabulary.mentioned_mask(query).astype(np.float64),
    )


def _log_softmax(scores: np.ndarray) -> np.ndarray:
    top = scores.max(axis=1, keepdims=True)
    shifted = scores - top
    return shifted - np.log(np.exp(shifted).sum(axis=1, keepdims=True))


class LogLinearPolicy(PolicyModel):
    def __init__(
        self,
        vocabulary: Vocabulary,
        config: PolicyConfig | None = None,
        weights: np.ndarray | None = None,
    ) -> None:
        self.vocabulary = vocabulary
        self.config = config or PolicyConfig()

        size = len(vocabulary)
        contexts = size + 1
        self._bos = size
        self._shapes = (
            (size,),
            (contexts, size),
            (contexts, contexts, size),
            (self.config.position_buckets, size),
            (self.config.context_buckets, size),
            (size,),
        )
        num_parameters = sum(math.prod(shape) for shape in self._shapes)

        if weights is None:
            rng = np.random.default_rng(self.config.seed)
            weights = (
                rng.normal(0.0, self.config.init_scale, num_parameters)
                if self.config.init_scale
                else np.zeros(num_parameters)
            )
        elif weights.shape != (num_parameters,):
            raise ConfigurationError(
                f"expected {num_parameters} weights, got {weights.shape}"
            )

        # Updates are in place so the block views stay valid.
        self.weights = np.ascontiguousarray(weights, dtype=np.float64)
        self._blocks = self._views(self.weights)

    @property
    def num_parameters(self) -> int:
        return len(self.weights)

    def _views(self, flat: np.ndarray) -> _Blocks:
        views = []
        offset = 0
        for shape in self._shapes:
            length = math.prod(shape)
            views.append(flat[offset : offset + length].reshape(shape))
            offset += length
        return _Blocks(*views)

    def _features(self, query: Query) -> _QueryFeatures:
        return _query_features(self.vocabulary, query, self.config.context_buckets)

    def _contexts(
        self, prefixes: Sequence[Sequence[int]]
    ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        bos = self._bos
        last_bucket = self.config.position_buckets - 1
        previous2 = np.empty(len(prefixes), dtype=np.intp)
        previous1 = np.empty(len(prefixes), dtype=np.intp)
        positions = np.empty(len(prefixes), dtype=np.intp)
        for row, prefix in enumerate(prefixes):
            length = len(prefix)
            previous1[row] = prefix[-1] if length >= 1 else bos
            previous2[row] = prefix[-2] if length >= 2 else bos
            positions[row] = min(length // 2, last_bucket)
        return previous2, previous1, positions

    def _log_probs(
        self,
        features: _QueryFeatures,
        previous2: np.ndarray,
        previous1: np.ndarray,
        positions: np.ndarray,
    ) -> np.ndarray:
        blocks = self._blocks
        shared = (
            blocks.unigram
            + features.scale * blocks.context[features.buckets].sum(axis=0)
            + blocks.mentioned * features.mentioned
        )
        scores = (
            shared[np.newaxis, :]
            + blocks.bigram[previous1]
            + blocks.trigram[previous2, previous1]
            + blocks.position[positions]
        )
        scores[:, ~features.allowed] = -np.inf
        return _log_softmax(scores)

    def next_log_dists(
        self, query: Query, prefixes: Sequence[Sequence[int]]
    ) -> np.ndarray:
        return self._log_probs(self._features(query), *self._contexts(prefixes))

    def _accumulate(
        self,
        blocks: _Blocks,
        query: Query,
        token_ids: Sequence[int],
        coefficient: float,
    ) -> float:
        """Add coefficient * d log p(token_ids) / dw into `blocks`; return log p."""
        if not token_ids:
            return 0.0
        features = self._features(query)
        previous2, previous1, positions = self._contexts(
            [token_ids[:t] for t in range(len(token_ids))]
        )
        log_probs = self._log_probs(features, previous2, previous1, positions)

        rows = np.arange(len(token_ids))
        targets = np.asarray(token_ids, dtype=np.intp)
        logprob = float(log_probs[rows, targets].sum())

        gradient = -np.exp(log_probs)
        gradient[rows, targets] += 1.0
        gradient *= coefficient
        self._scatter(blocks, features, previous2, previous1, positions, gradient)
        return logprob

    @staticmethod
    def _scatter(
        blocks: _Blocks,
        features: _QueryFeatures,
        previous2: np.ndarray,
        previous1: np.ndarray,
        positions: np.ndarray,
        per_position: np.ndarray,
    ) -> None:
        total = per_position.sum(axis=0)
        blocks.unigram += total
        np.add.at(blocks.bigram, previous1, per_position)
        np.add.at(blocks.trigram, (previous2, previous1), per_position)
        np.add.at(blocks.position, positions, per_position)
        if len(features.buckets):
            blocks.context[features.buckets] += features.scale * total
        blocks.mentioned += features.mentioned * total

    def log_prob_gradient(self, query: Query, token_ids: Sequence[int]) -> np.ndarray:
        """Dense gradient of log p(token_ids | query) with respect to the weights."""
        gradient = np.zeros_like(self.weights)
        self._accumulate(self._views(gradient), query, token_ids, 1.0)
        return gradient

    def active_coordinates(self, query: Query, token_ids: Sequence[int]) -> np.ndarray:
        """Indices of the weights whose features fire somewhere in the sequence."""
        touched = np.zeros_like(self.weights)
        if token_ids:
            contexts = self._contexts([token_ids[:t] for t in range(len(token_ids))])
            self._scatter(
                self._views(touched),
                self._features(query),
                *contexts,
                np.ones((len(token_ids), len(self.vocabulary))),
            )
        return np.flatnonzero(touched)

    def _apply(
        self, batch: Sequence[tuple[PolicyTarget, float]], learning_rate: float
    ) -> float:
        if not batch:
            return 0.0

        gradient = np.zeros_like(self.weights)
        blocks = self._views(gradient)
        loss = 0.0
        active = 0
        for target, weight in batch:
            if weight == 0.0:
                continue
            logprob = self._accumulate(blocks, target.query, target.token_ids, weight)
            loss -= weight * logprob
            active += 1

        if active:
            self.weights += (learning_rate / len(batch)) * gradient
        return loss / len(batch)

    def mle_update(self, batch: Sequence[PolicyTarget], learning_rate: float) -> float:
        return self._apply([(target, 1.0) for target in batch], learning_rate)

    def reinforce_update(
        self, batch: Sequence[PolicyTarget], learning_rate: float
    ) -> float:
        return self._apply([(target, target.weight) for target in batch], learning_rate)

    def clone(self) -> LogLinearPolicy:
        return LogLinearPolicy(self.vocabulary, self.config, self.weights.copy())


def loglinear_gradient_check(
    model: LogLinearPolicy,
    example: PolicyTarget,
    epsilon: float = GRADIENT_CHECK_EPSILON,
    max_coordinates: int | None = 256,
    seed: int = 0,
) -> float:
    """
    Largest relative error between the analytic gradient of
    log p(example) and central finite differences.

    Relative error is |a - n| / max(1, |a|, |n|). Only coordinates whose
    features fire are compared (the rest are identically zero on both
    sides); with `max_coordinates` a seeded sample of them.
    """
    query, token_ids = example.query, example.token_ids
    analytic = model.log_prob_gradient(query, token_ids)
    coordinates = model.active_coordinates(query, token_ids)
    if max_coordinates is not None and len(coordinates) > max_coordinates:
        rng = np.random.default_rng(seed)
        coordinates = np.sort(rng.choice(coordinates, max_coordinates, replace=False))

    weights = model.weights
    worst = 0.0
    for index in coordinates:
        original = weights[index]
        weights[index] = original + epsilon
        plus = model.sequence_logprob(query, token_ids)
        weights[index] = original - epsilon
        minus = model.sequence_logprob(query, token_ids)
        weights[index] = original

        numeric = (plus - minus) / (2.0 * epsilon)
        error = abs(analytic[index] - numeric) / max(
            1.0, abs(analytic[index]), abs(numeric)
        )
        worst = max(worst, error)

    logger.debug(
        "Gradient check over %d coordinates: max relative error %.3g",
        len(coordinates),
        worst,
    )
    return worst
