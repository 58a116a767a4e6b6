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
Policy checkpoints.

A checkpoint is a JSON document:

    {
        "magic": "simdsl-policy",
        "version": 1,
        "model": "loglinear",
        "vocabulary": ["<eos>", "<unk>", "func", ...],
        "config": {"context_buckets": 64, ...},
        "size": 1234567,
        "weights": {"indices": [...], "values": [...]}
    }

Weights are stored sparsely since most feature conjunctions never fire.
"""
from __future__ import annotations

import logging
import pathlib
from typing import Any, TypedDict

import numpy as np

from simdsl.exceptions import CheckpointError, ConfigurationError
import simdsl.sdjson as sdjson

from .abstract import PolicyModel
from .loglinear import LogLinearPolicy, PolicyConfig
from .vocabulary import Vocabulary

logger = logging.getLogger(__name__)

CHECKPOINT_MAGIC = "simdsl-policy"
CHECKPOINT_VERSION = 1
MODEL_LOGLINEAR = "loglinear"


class SparseWeights(TypedDict):
    indices: list[int]
    values: list[float]


class CheckpointLayout(TypedDict):
    magic: str
    version: int
    model: str
    vocabulary: list[str]
    config: dict[str, Any]
    size: int
    weights: SparseWeights


def checkpoint_data(model: LogLinearPolicy) -> CheckpointLayout:
    indices = np.flatnonzero(model.weights)
    return CheckpointLayout(
        magic=CHECKPOINT_MAGIC,
        version=CHECKPOINT_VERSION,
        model=MODEL_LOGLINEAR,
        vocabulary=list(model.vocabulary.tokens),
        config=model.config.as_dict(),
        size=model.num_parameters,
        weights=SparseWeights(
            indices=indices.tolist(), values=model.weights[indices].tolist()
        ),
    )


def policy_from_data(data: Any) -> LogLinearPolicy:
    if not isinstance(data, dict) or data.get("magic") != CHECKPOINT_MAGIC:
        raise CheckpointError("not a simdsl policy checkpoint")
    if data.get("version") != CHECKPOINT_VERSION:
        raise CheckpointError(
            f"unsupported checkpoint version {data.get('version')!r}, "
            f"expected {CHECKPOINT_VERSION}"
        )
    if data.get("model") != MODEL_LOGLINEAR:
        raise CheckpointError(f"unknown model type {data.get('model')!r}")

    try:
        vocabulary = Vocabulary(data["vocabulary"])
        config = PolicyConfig(**data["config"])
        weights = np.zeros(int(data["size"]))
        indices = np.asarray(data["weights"]["indices"], dtype=np.intp)
        weights[indices] = np.asarray(data["weights"]["values"], dtype=np.float64)
        return LogLinearPolicy(vocabulary, config, weights)
    except (KeyError, TypeError, IndexError, ValueError, ConfigurationError) as exc:
        raise CheckpointError(f"malformed checkpoint: {exc}") from exc


def save_checkpoint(model: PolicyModel, location: pathlib.Path) -> None:
    """
    Write a checkpoint.

    :raises CheckpointError: if the model has no checkpoint format or the file
        cannot be written
    """
    if not isinstance(model, LogLinearPolicy):
        raise CheckpointError(
            f"cannot checkpoint a {type(model).__name__}, only log-linear policies"
        )
    try:
        location.parent.mkdir(parents=True, exist_ok=True)
        with open(location, mode="w", encoding="utf-8") as fp:
            fp.write(sdjson.dumps(checkpoint_data(model)))
    except OSError as exc:
        raise CheckpointError(f"could not write checkpoint {location}: {exc}") from exc
    logger.debug("Saved %d-parameter policy to %s", model.num_parameters, location)


def load_checkpoint(location: pathlib.Path) -> LogLinearPolicy:
    """
    Read a checkpoint.

    :raises CheckpointError: if the file is missing, not JSON, or not a checkpoint
    """
    try:
        data = sdjson.loads(location.read_bytes())
    except OSError as exc:
        raise CheckpointError(f"could not read checkpoint {location}: {exc}") from exc
    except sdjson.JSON_DECODE_EXCEPTIONS as exc:
        raise CheckpointError(f"checkpoint {location} is not valid JSON") from exc
    return policy_from_data(data)
