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

from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum
from typing import Any

from simdsl.dsl.ast import Assign, Return
from simdsl.enum import EnumWithDescription
import simdsl.sdjson as sdjson

from .values import RuntimeErrorKind, Value

# Identifier -> value. Absent identifiers hold the "not yet used" symbol;
# it is never stored explicitly. Snapshots must not be mutated.
State = dict[str, Value]


class InstructionKind(Enum):
    ASSIGN = "assign"
    RETURN = "return"


class OutcomeStatus(EnumWithDescription):
    RETURNED = "returned", "The program executed a return statement."
    NO_RETURN = "no-return", "The program finished without returning."
    RUNTIME_ERROR = "runtime-error", "The program stopped on a runtime error."


@dataclass(frozen=True)
class InstructionRecord:
    t: int
    kind: InstructionKind
    statement: Assign | Return
    state: State

    def as_dict(self) -> dict[str, Any]:
        return {"t": self.t, "kind": self.kind.value, "state": dict(self.state)}


@dataclass(frozen=True)
class ExecutionTrace:
    records: tuple[InstructionRecord, ...] = ()

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[InstructionRecord]:
        return iter(self.records)

    def __getitem__(self, index: int) -> InstructionRecord:
        return self.records[index]

    @property
    def states(self) -> list[State]:
        return [record.state for record in self.records]

    def as_list(self) -> list[dict[str, Any]]:
        return [record.as_dict() for record in self.records]

    def to_json(self) -> str:
        """`[{"t": 0, "kind": "assign", "state": {"x": 0}}, ...]`"""
        return sdjson.dumps(self.as_list())


@dataclass(frozen=True)
class RuntimeFault:
    kind: RuntimeErrorKind
    step: int
    message: str

    def __str__(self) -> str:
        return f"{self.kind.value} at step {self.step}: {self.message}"


@dataclass(frozen=True)
class ExecutionOutcome:
    status: OutcomeStatus
    trace: ExecutionTrace
    steps_executed: int
    value: Value | None = None
    fault: RuntimeFault | None = None

    @property
    def returned(self) -> bool:
        return self.status is OutcomeStatus.RETURNED
