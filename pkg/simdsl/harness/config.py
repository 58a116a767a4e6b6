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

from dataclasses import asdict, dataclass, replace
import os
from typing import Any

from simdsl.const import (
    DEFAULT_BATCH,
    DEFAULT_BEAM_WIDTH,
    DEFAULT_BLEU_MAX_ORDER,
    DEFAULT_EPOCHS,
    DEFAULT_GAMMA,
    DEFAULT_MAX_LEN,
    DEFAULT_N,
    DEFAULT_REAL_TOLERANCE,
    DEFAULT_S,
)
from simdsl.exceptions import ConfigurationError
from simdsl.similarity import RewardConfig


@dataclass(frozen=True)
class HarnessConfig:
    # candidates decoded per example
    n: int = DEFAULT_N
    # candidates per example forwarded to the batch
    s: int = DEFAULT_S
    batch_size: int = DEFAULT_BATCH
    gamma: float = DEFAULT_GAMMA
    beam_width: int = DEFAULT_BEAM_WIDTH
    learning_rate: float = 0.005
    epochs: int = DEFAULT_EPOCHS
    max_steps: int | None = None
    max_len: int = DEFAULT_MAX_LEN
    seed: int = 0
    jobs: int | None = None

    pretrain: bool = False
    pretrain_epochs: int = 40
    pretrain_learning_rate: float = 0.02
    pretrain_batch_size: int = 32

    # False withholds the reference trace: a pure BLEU reward scaled by gamma
    semantic_reward: bool = True
    real_equality_tolerance: float = DEFAULT_REAL_TOLERANCE
    bleu_max_order: int = DEFAULT_BLEU_MAX_ORDER
    log_candidates: bool = False

    def __post_init__(self) -> None:
        counts = (
            "n",
            "s",
            "batch_size",
            "beam_width",
            "max_len",
            "pretrain_batch_size",
        )
        for name in counts:
            if (value := getattr(self, name)) < 1:
                raise ConfigurationError(f"{name} must be >= 1, got {value}")
        for name in ("epochs", "pretrain_epochs"):
            if (value := getattr(self, name)) < 0:
                raise ConfigurationError(f"{name} must be >= 0, got {value}")
        if self.s > self.n:
            raise ConfigurationError(f"S ({self.s}) must not exceed N ({self.n})")
        if self.batch_size < self.s:
            raise ConfigurationError(
                f"batch size ({self.batch_size}) must be at least S ({self.s})"
            )
        if self.beam_width < self.n:
            raise ConfigurationError(
                f"beam width ({self.beam_width}) must be at least N ({self.n})"
            )
        if not 0.0 <= self.gamma <= 1.0:
            raise ConfigurationError(f"gamma must be in [0, 1], got {self.gamma}")
        if not self.learning_rate > 0 or not self.pretrain_learning_rate > 0:
            raise ConfigurationError("learning rates must be positive")
        if self.max_steps is not None and self.max_steps < 1:
            raise ConfigurationError(f"max_steps must be >= 1, got {self.max_steps}")
        if self.jobs is not None and self.jobs < 1:
            raise ConfigurationError(f"jobs must be >= 1, got {self.jobs}")

    @property
    def reward(self) -> RewardConfig:
        return RewardConfig(
            gamma=self.gamma,
            real_equality_tolerance=self.real_equality_tolerance,
            bleu_max_order=self.bleu_max_order,
            max_steps=self.max_steps,
        )

    @property
    def workers(self) -> int:
        return self.jobs or os.cpu_count() or 1

    def with_gamma(self, gamma: float) -> HarnessConfig:
        return replace(self, gamma=gamma)

    def as_dict(self) -> dict[str, Any]:
        return asdict(self)
