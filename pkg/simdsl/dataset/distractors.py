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
Wrong-but-plausible answer options.

A distractor lies within 30% of the gold answer (within 1.0 when the gold
answer is smaller than 1 in magnitude) and is rounded to as many decimals as
the gold answer displays. When that grid is too coarse to hold three
distinct wrong values the precision is raised one decimal at a time.
"""
from __future__ import annotations

from decimal import Decimal
import math
import random
from typing import Union

from simdsl.exceptions import DatasetError

NUM_DISTRACTORS = 3
RELATIVE_RANGE = 0.3
SMALL_GOLD_RANGE = 1.0
MAX_DECIMALS = 6
MAX_DRAWS = 1000

Seed = Union[int, str]


def displayed_decimals(value: float) -> int:
    """0 for 16.0, 1 for 16.5, 2 for 0.25; capped at MAX_DECIMALS."""
    exponent = Decimal(repr(value)).normalize().as_tuple().exponent
    assert isinstance(exponent, int)
    return min(max(0, -exponent), MAX_DECIMALS)


def distractor_bounds(gold: float) -> tuple[float, float]:
    half_width = SMALL_GOLD_RANGE if abs(gold) < 1 else RELATIVE_RANGE * abs(gold)
    return gold - half_width, gold + half_width


def _grid_size(low: float, high: float, decimals: int) -> int:
    scale = 10**decimals
    return math.floor(high * scale) - math.ceil(low * scale) + 1


def generate_distractors(gold: float, seed: Seed) -> tuple[float, float, float]:
    """
    Three distinct values near `gold`, none equal to it.

    Deterministic for a given (gold, seed).

    :raises DatasetError: if gold is not finite
    """
    if not math.isfinite(gold):
        raise DatasetError(f"cannot generate distractors for {gold!r}")

    rng = random.Random(seed)
    low, high = distractor_bounds(gold)
    decimals = displayed_decimals(gold)
    # The gold value itself occupies one grid point.
    while _grid_size(low, high, decimals) < NUM_DISTRACTORS + 1 and decimals < 12:
        decimals += 1

    chosen: list[float] = []
    for _ in range(MAX_DRAWS):
        value = round(rng.uniform(low, high), decimals)
        if (
            low <= value <= high
            and value != round(gold, decimals)
            and value != gold
            and value not in chosen
        ):
            chosen.append(value)
            if len(chosen) == NUM_DISTRACTORS:
                return chosen[0], chosen[1], chosen[2]

    raise DatasetError(f"could not place {NUM_DISTRACTORS} distractors around {gold!r}")


def make_options(gold: float, seed: Seed) -> tuple[float, ...]:
    """The gold answer plus its distractors, in ascending order."""
    return tuple(sorted((gold, *generate_distractors(gold, seed))))
