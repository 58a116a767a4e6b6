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

from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

T = TypeVar("T")
R = TypeVar("R")

ANSWER_REL_TOLERANCE = 1e-4
ANSWER_ABS_TOLERANCE = 1e-6


def answers_match(predicted: float | None, gold: float) -> bool:
    """
    Checks a predicted answer against the gold one: within 1e-4 relative,
    or 1e-6 absolute near zero. A missing answer never matches.
    """
    if predicted is None:
        return False
    return abs(predicted - gold) <= max(
        ANSWER_REL_TOLERANCE * abs(gold), ANSWER_ABS_TOLERANCE
    )


def nearest_option(predicted: float, options: Sequence[float]) -> float:
    """The option closest to `predicted`; the earlier option wins a tie."""
    return min(options, key=lambda option: abs(option - predicted))


def ordered_map(
    function: Callable[[T], R], items: Sequence[T], workers: int = 1
) -> list[R]:
    """Map over a thread pool; results come back in input order."""
    if workers <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(workers, len(items))) as executor:
        return list(executor.map(function, items))
