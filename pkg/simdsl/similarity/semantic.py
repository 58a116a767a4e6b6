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
State-transition similarity.

Both programs are executed and their per-instruction states compared
timestamp by timestamp. A timestamp matches only when the two states define
exactly the same identifiers with equal values; the score is the number of
matches divided by the longer trace length.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from simdsl.const import DEFAULT_REAL_TOLERANCE
from simdsl.dsl.ast import Program
from simdsl.interpreter import State, Value, execute_and_get_state
from simdsl.interpreter.values import is_int


@dataclass(frozen=True)
class SemanticScore:
    q_semantic: float
    matched: int
    t_min: int
    t_max: int


def values_equal(left: Value, right: Value, tolerance: float) -> bool:
    if is_int(left) and is_int(right):
        return left == right
    return abs(float(left) - float(right)) <= tolerance


def states_match(
    left: State, right: State, tolerance: float = DEFAULT_REAL_TOLERANCE
) -> bool:
    """Compare over the union of defined identifiers; a one-sided one mismatches."""
    if left.keys() != right.keys():
        return False
    return all(values_equal(left[name], right[name], tolerance) for name in left)


def score_states(
    reference_states: Sequence[State],
    predicted_states: Sequence[State],
    tolerance: float = DEFAULT_REAL_TOLERANCE,
) -> SemanticScore:
    t_max = max(len(reference_states), len(predicted_states))
    t_min = min(len(reference_states), len(predicted_states))
    if t_max == 0:
        # Two programs that both fail before their first instruction are not
        # rewarded as equal.
        return SemanticScore(0.0, 0, 0, 0)

    matched = sum(
        1
        for t in range(t_min)
        if states_match(reference_states[t], predicted_states[t], tolerance)
    )
    return SemanticScore(matched / t_max, matched, t_min, t_max)


def semantic_reward(
    reference: Program,
    predicted: Program,
    tolerance: float = DEFAULT_REAL_TOLERANCE,
    max_steps: int | None = None,
) -> SemanticScore:
    """
    Execute both programs and score their state traces.

    Runtime errors truncate a trace rather than failing the comparison.
    """
    return score_states(
        execute_and_get_state(reference, max_steps),
        execute_and_get_state(predicted, max_steps),
        tolerance,
    )
