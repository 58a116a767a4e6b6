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

import math
from typing import Union

from simdsl.const import INT_MAX, INT_MIN
from simdsl.dsl.ast import ArithOp, CompareOp
from simdsl.enum import EnumWithDescription
from simdsl.exceptions import ExecutionFault

# Int is a Python int kept within signed 64 bits, Real a Python float.
Value = Union[int, float]


class RuntimeErrorKind(EnumWithDescription):
    DIVISION_BY_ZERO = "division-by-zero", "Division by zero."
    INT_OVERFLOW = "int-overflow", "Integer result does not fit in 64 bits."
    UNDEFINED_VARIABLE = (
        "undefined-variable",
        "A variable was read before it was assigned.",
    )
    STEP_LIMIT = "step-limit", "The program exceeded the maximum number of steps."
    NON_FINITE = "non-finite", "A real result overflowed to infinity or NaN."


def is_int(value: Value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _check_int(result: int, step: int) -> int:
    if result < INT_MIN or result > INT_MAX:
        raise ExecutionFault(
            RuntimeErrorKind.INT_OVERFLOW,
            step,
            f"integer overflow: {result} does not fit in 64 bits",
        )
    return result


def _check_real(result: float, step: int) -> float:
    if not math.isfinite(result):
        raise ExecutionFault(
            RuntimeErrorKind.NON_FINITE, step, f"real result is {result}"
        )
    return result


def apply_arith(op: ArithOp, left: Value, right: Value, step: int) -> Value:
    """
    Evaluate one binary operation.

    Int op Int stays Int except for `/`, which is always real division.
    Anything involving a Real is computed in double precision.
    """
    both_int = is_int(left) and is_int(right)

    if op in (ArithOp.DIV, ArithOp.FLOORDIV) and right == 0:
        raise ExecutionFault(
            RuntimeErrorKind.DIVISION_BY_ZERO,
            step,
            f"division by zero in '{op.value}'",
        )

    if op is ArithOp.DIV:
        try:
            return _check_real(left / right, step)
        except OverflowError:
            return _check_real(math.inf, step)

    if both_int:
        if op is ArithOp.ADD:
            return _check_int(left + right, step)
        if op is ArithOp.SUB:
            return _check_int(left - right, step)
        if op is ArithOp.MUL:
            return _check_int(left * right, step)
        return _check_int(left // right, step)

    left_real, right_real = float(left), float(right)
    if op is ArithOp.ADD:
        return _check_real(left_real + right_real, step)
    if op is ArithOp.SUB:
        return _check_real(left_real - right_real, step)
    if op is ArithOp.MUL:
        return _check_real(left_real * right_real, step)
    try:
        return _check_real(left_real // right_real, step)
    except OverflowError:
        return _check_real(math.inf, step)


def compare(op: CompareOp, left: Value, right: Value) -> bool:
    """Exact comparison; int/float comparisons are exact in Python."""
    if op is CompareOp.LT:
        return left < right
    if op is CompareOp.GT:
        return left > right
    if op is CompareOp.GE:
        return left >= right
    if op is CompareOp.LE:
        return left <= right
    if op is CompareOp.NE:
        return left != right
    return left == right
