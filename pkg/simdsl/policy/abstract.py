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

from abc import ABCMeta, abstractmethod
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .vocabulary import Query, Vocabulary


@dataclass(frozen=True)
class PolicyTarget:
    """A token sequence to raise the likelihood of, scaled by `weight`."""

    query: Query
    token_ids: tuple[int, ...]
    weight: float = 1.0


class PolicyModel(metaclass=ABCMeta):
    """
    An autoregressive distribution over vocabulary tokens given a query.

    Reads (`next_log_dists`, `sequence_logprob`, beam search) may run
    concurrently. Updates need exclusive access.
    """

    vocabulary: Vocabulary

    @abstractmethod
    def next_log_dists(
        self, query: Query, prefixes: Sequence[Sequence[int]]
    ) -> np.ndarray:
        """
        Log-probabilities of the next token, one row per prefix.

        Tokens that cannot be generated for this query get -inf.
        """

    @abstractmethod
    def mle_update(self, batch: Sequence[PolicyTarget], learning_rate: float) -> float:
        """
        One gradient step on the mean negative log-likelihood of `batch`.

        Target weights are ignored. Returns the loss before the step.
        """

    @abstractmethod
    def reinforce_update(
        self, batch: Sequence[PolicyTarget], learning_rate: float
    ) -> float:
        """
        One gradient step on L = -(1/|batch|) * sum(weight * log p(target)).

        Returns L before the step.
        """

    @abstractmethod
    def clone(self) -> PolicyModel:
        """An independent copy with the same parameters."""

    def next_dist(self, query: Query, prefix: Sequence[int]) -> np.ndarray:
        return np.exp(self.next_log_dists(query, [prefix])[0])

    def sequence_logprob(self, query: Query, token_ids: Sequence[int]) -> float:
        """Sum of log next_dist over the sequence, all prefixes in one batch."""
        if not token_ids:
            return 0.0
        prefixes = [token_ids[:t] for t in range(len(token_ids))]
        log_dists = self.next_log_dists(query, prefixes)
        return float(log_dists[np.arange(len(token_ids)), list(token_ids)].sum())
