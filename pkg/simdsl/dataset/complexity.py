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
from typing import Any

from simdsl.dsl import If, Program, Repeat, count_nodes, parse_source
from simdsl.enum import EnumWithDescription
from simdsl.interpreter import count_state_changes

from .example import QAExample

COMPLEX_MIN_CHANGES = 16
SIMPLE_MAX_CHANGES = 5


class Complexity(EnumWithDescription):
    COMPLEX = "complex", "At least one if and one loop, more than 15 state changes"
    SIMPLE = "simple", "At most one if, no loops, at most 5 state changes"
    OTHER = "other", "Neither complex nor simple"


@dataclass(frozen=True)
class ComplexityLabel:
    label: Complexity
    if_branches: int
    loop_branches: int
    state_changes: int

    def as_dict(self) -> dict[str, Any]:
        return {
            "label": self.label.value,
            "if_branches": self.if_branches,
            "loop_branches": self.loop_branches,
            "state_changes": self.state_changes,
        }


def classify_program(program: Program, max_steps: int | None = None) -> ComplexityLabel:
    """Static if/repeat counts plus the number of executed assignments."""
    if_branches = count_nodes(program, If)
    loop_branches = count_nodes(program, Repeat)
    state_changes = count_state_changes(program, max_steps)

    complex_shape = if_branches >= 1 and loop_branches >= 1
    simple_shape = if_branches <= 1 and loop_branches == 0
    if complex_shape and state_changes >= COMPLEX_MIN_CHANGES:
        label = Complexity.COMPLEX
    elif simple_shape and state_changes <= SIMPLE_MAX_CHANGES:
        label = Complexity.SIMPLE
    else:
        label = Complexity.OTHER
    return ComplexityLabel(label, if_branches, loop_branches, state_changes)


def classify_complexity(
    example: QAExample, max_steps: int | None = None
) -> ComplexityLabel:
    """
    :raises LexError: if the reference program does not lex
    :raises ParseError: if the reference program does not parse
    """
    return classify_program(parse_source(example.reference_program), max_steps)
