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

from collections.abc import Sequence
from dataclasses import dataclass
import logging
from typing import Protocol, Union

import numpy as np

from simdsl.dsl.printer import program_tokens
from simdsl.exceptions import ConfigurationError, DatasetError, TrainingDivergedError

from .abstract import PolicyModel, PolicyTarget
from .vocabulary import Vocabulary

logger = logging.getLogger(__name__)

DIVERGENCE_RATIO = 1.10
DIVERGENCE_SLACK = 1e-6


class SupervisedExample(Protocol):
    context: str
    question: str
    reference_program: str


TrainingItem = Union[PolicyTarget, SupervisedExample]


@dataclass(frozen=True)
class PretrainResult:
    model: PolicyModel
    # nll_history[0] is measured before the first update
    nll_history: list[float]

    @property
    def epochs(self) -> int:
        return len(self.nll_history) - 1


def to_target(vocabulary: Vocabulary, example: SupervisedExample) -> PolicyTarget:
    """The reference program as token ids, EOS appended."""
    query = vocabulary.query(example.context, example.question)
    token_ids = vocabulary.encode(program_tokens(example.reference_program), query)
    return PolicyTarget(query, (*token_ids, vocabulary.eos_id))


def mean_nll(model: PolicyModel, targets: Sequence[PolicyTarget]) -> float:
    return -sum(
        model.sequence_logprob(target.query, target.token_ids) for target in targets
    ) / len(targets)


def mle_pretrain(
    model: PolicyModel,
    dataset: Sequence[TrainingItem],
    epochs: int,
    learning_rate: float,
    batch_size: int = 32,
    seed: int = 0,
) -> PretrainResult:
    """
    Minibatch gradient descent on the mean negative log-likelihood of the
    reference programs.

    Minibatches are drawn from a seeded shuffle each epoch. The model is
    updated in place and also returned in the result.

    :raises DatasetError: if the dataset is empty
    :raises TrainingDivergedError: if the NLL grows by more than 10% in an epoch
    """
    if not dataset:
        raise DatasetError("cannot pre-train on an empty dataset")
    if epochs < 0 or batch_size < 1 or not learning_rate > 0:
        raise ConfigurationError(
            "need epochs >= 0, batch_size >= 1 and a positive learning rate"
        )

    targets = [
        item if isinstance(item, PolicyTarget) else to_target(model.vocabulary, item)
        for item in dataset
    ]
    rng = np.random.default_rng(seed)

    history = [mean_nll(model, targets)]
    logger.info(
        "MLE pre-training on %d examples, initial NLL %.4f", len(targets), history[0]
    )

    for epoch in range(1, epochs + 1):
        order = rng.permutation(len(targets))
        for start in range(0, len(order), batch_size):
            batch = [targets[index] for index in order[start : start + batch_size]]
            model.mle_update(batch, learning_rate)

        nll = mean_nll(model, targets)
        logger.info("MLE epoch %d: NLL %.4f", epoch, nll)
        if nll > history[-1] * DIVERGENCE_RATIO + DIVERGENCE_SLACK:
            raise TrainingDivergedError(
                f"NLL rose from {history[-1]:.4f} to {nll:.4f} in epoch {epoch}; "
                "lower the learning rate",
                epoch,
                history[-1],
                nll,
            )
        history.append(nll)

    return PretrainResult(model, history)
