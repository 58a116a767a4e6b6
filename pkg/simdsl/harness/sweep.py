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
from dataclasses import dataclass, replace
import logging
from typing import Any

from simdsl.dataset import QAExample
from simdsl.exceptions import ConfigurationError
from simdsl.policy import PolicyModel

from .config import HarnessConfig
from .qa import EvaluationMode, evaluate_accuracy
from .train import reinforce_train

logger = logging.getLogger(__name__)

BASELINE_LABEL = "mle"


@dataclass(frozen=True)
class SweepRow:
    label: str
    gamma: float | None
    accuracy: float
    correct: int
    total: int
    mean_q: float | None = None

    def as_dict(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "gamma": self.gamma,
            "accuracy": self.accuracy,
            "correct": self.correct,
            "total": self.total,
            "mean_q": self.mean_q,
        }


def gamma_sweep(
    checkpoint: PolicyModel,
    dataset: Sequence[QAExample],
    gammas: Sequence[float],
    config: HarnessConfig,
    test_set: Sequence[QAExample] | None = None,
    mode: EvaluationMode = EvaluationMode.EXACT,
    include_baseline: bool = True,
) -> list[SweepRow]:
    """
    REINFORCE-train a copy of `checkpoint` once per gamma and evaluate it.

    Every run starts from the same parameters with the same seed, so a row
    depends only on (seed, checkpoint, gamma). With `include_baseline` the
    first row is the untouched checkpoint, labelled "mle". `test_set`
    defaults to `dataset`.
    """
    for gamma in gammas:
        if not 0.0 <= gamma <= 1.0:
            raise ConfigurationError(f"gamma must be in [0, 1], got {gamma}")

    evaluation_set = dataset if test_set is None else test_set
    # The checkpoint is already pre-trained.
    run_config = replace(config, pretrain=False)
    rows = []

    if include_baseline:
        model = checkpoint.clone()
        report = evaluate_accuracy(model, evaluation_set, run_config, mode)
        rows.append(
            SweepRow(
                BASELINE_LABEL, None, report.accuracy, report.correct, report.total
            )
        )

    for gamma in gammas:
        model = checkpoint.clone()
        result = reinforce_train(model, dataset, run_config.with_gamma(gamma))
        report = evaluate_accuracy(model, evaluation_set, run_config, mode)
        epoch_q = result.mean_q_by_epoch()
        rows.append(
            SweepRow(
                f"gamma={gamma:g}",
                gamma,
                report.accuracy,
                report.correct,
                report.total,
                epoch_q[-1] if epoch_q else None,
            )
        )
        logger.info("gamma=%g: accuracy %.4f", gamma, report.accuracy)

    return rows
