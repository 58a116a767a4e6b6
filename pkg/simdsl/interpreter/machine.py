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
Tree-walking executor.

Only assignments and `return` write trace records; evaluating an `if`
condition or entering a `repeat` does not touch memory and is not recorded.
Loop bodies are recorded once per iteration.

Only recorded instructions count towards the step cap. Condition
evaluations have their own, larger cap so that a loop whose body never
fires still terminates.
"""
from __future__ import annotations

from collections.abc import Sequence
import logging

from simdsl.const import (
    CONDITION_LIMIT_FACTOR,
    RETURN_VARIABLE,
    default_max_steps,
)
from simdsl.dsl.ast import (
    Assign,
    Atom,
    BinaryExpr,
    Identifier,
    If,
    IntLiteral,
    Program,
    RealLiteral,
    Repeat,
    Return,
    Statement,
)
from simdsl.exceptions import ExecutionFault

from .trace import (
    ExecutionOutcome,
    ExecutionTrace,
    InstructionKind,
    InstructionRecord,
    OutcomeStatus,
    RuntimeFault,
    State,
)
from .values import RuntimeErrorKind, Value, apply_arith, compare

logger = logging.getLogger(__name__)


class _Returned(Exception):
    def __init__(self, value: Value) -> None:
        self.value = value


class Machine:
    """Runs one program once. Use `execute()` rather than this directly."""

    def __init__(self, program: Program, max_steps: int) -> None:
        self._program = program
        self._max_steps = max_steps
        self._memory: State = {}
        self._records: list[InstructionRecord] = []
        self._steps = 0
        self._conditions = 0
        self._max_conditions = max_steps * CONDITION_LIMIT_FACTOR

    def run(self) -> ExecutionOutcome:
        try:
            self._run_block(self._program.body)
        except _Returned as returned:
            return self._outcome(OutcomeStatus.RETURNED, value=returned.value)
        except ExecutionFault as fault:
            logger.debug("Execution stopped: %s", fault.message)
            return self._outcome(
                OutcomeStatus.RUNTIME_ERROR,
                fault=RuntimeFault(fault.kind, fault.step, fault.message),
            )
        return self._outcome(OutcomeStatus.NO_RETURN)

    def _outcome(
        self,
        status: OutcomeStatus,
        value: Value | None = None,
        fault: RuntimeFault | None = None,
    ) -> ExecutionOutcome:
        return ExecutionOutcome(
            status=status,
            trace=ExecutionTrace(tuple(self._records)),
            steps_executed=self._steps,
            value=value,
            fault=fault,
        )

    @property
    def _t(self) -> int:
        return len(self._records)

    def _tick(self) -> None:
        if self._steps >= self._max_steps:
            raise ExecutionFault(
                RuntimeErrorKind.STEP_LIMIT,
                self._t,
                f"exceeded {self._max_steps} steps",
            )
        self._steps += 1

    def _tick_condition(self) -> None:
        if self._conditions >= self._max_conditions:
            raise ExecutionFault(
                RuntimeErrorKind.STEP_LIMIT,
                self._t,
                f"evaluated more than {self._max_conditions} conditions",
            )
        self._conditions += 1

    def _run_block(self, statements: Sequence[Statement]) -> None:
        for statement in statements:
            if isinstance(statement, Assign):
                self._tick()
                self._assign(statement)
            elif isinstance(statement, Return):
                self._tick()
                self._return(statement)
            elif isinstance(statement, If):
                self._tick_condition()
                cond = statement.cond
                left = self._read(cond.lhs)
                right = self._eval_atom(cond.rhs)
                if compare(cond.op, left, right):
                    self._run_block(statement.body)
            elif isinstance(statement, Repeat):
                for _ in range(statement.count.value):
                    self._run_block(statement.body)
            else:
                raise TypeError(f"Unknown statement {statement!r}")

    def _assign(self, statement: Assign) -> None:
        rhs = statement.rhs
        if isinstance(rhs, BinaryExpr):
            value = apply_arith(
                rhs.op, self._eval_atom(rhs.left), self._eval_atom(rhs.right), self._t
            )
        else:
            value = self._eval_atom(rhs)

        self._memory[statement.target.name] = value
        self._records.append(
            InstructionRecord(
                self._t, InstructionKind.ASSIGN, statement, dict(self._memory)
            )
        )

    def _return(self, statement: Return) -> None:
        value = self._eval_atom(statement.expr)
        state = dict(self._memory)
        state[RETURN_VARIABLE] = value
        self._records.append(
            InstructionRecord(self._t, InstructionKind.RETURN, statement, state)
        )
        raise _Returned(value)

    def _read(self, identifier: Identifier) -> Value:
        try:
            return self._memory[identifier.name]
        except KeyError:
            raise ExecutionFault(
                RuntimeErrorKind.UNDEFINED_VARIABLE,
                self._t,
                f"variable {identifier.name!r} is read before it is assigned",
            ) from None

    def _eval_atom(self, atom: Atom) -> Value:
        if isinstance(atom, Identifier):
            return self._read(atom)
        if isinstance(atom, (IntLiteral, RealLiteral)):
            return atom.value
        raise TypeError(f"Unknown expression {atom!r}")


def execute(program: Program, max_steps: int | None = None) -> ExecutionOutcome:
    """
    Execute a program, recording the memory state after every instruction.

    Never raises for runtime errors: the outcome carries the fault and the
    records completed before it.
    """
    if max_steps is None:
        max_steps = default_max_steps()
    return Machine(program, max_steps).run()


def execute_and_get_state(
    program: Program, max_steps: int | None = None
) -> list[State]:
    """The state snapshots of `execute`, truncated at the first runtime error."""
    return execute(program, max_steps).trace.states


def answer_of(outcome: ExecutionOutcome) -> float | None:
    """The returned value widened to a real, or None when nothing was returned."""
    if outcome.status is not OutcomeStatus.RETURNED or outcome.value is None:
        return None
    return float(outcome.value)


def count_state_changes(program: Program, max_steps: int | None = None) -> int:
    """Number of executed assignments; the return record is not counted."""
    trace = execute(program, max_steps).trace
    return sum(1 for record in trace if record.kind is InstructionKind.ASSIGN)
