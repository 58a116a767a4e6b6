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
import math
from typing import Any

from simdsl.enum import EnumWithDescription
from simdsl.exceptions import DatasetError, LexError, ParseError
from simdsl.dsl import parse_source
from simdsl.interpreter import answer_of, execute

ANSWER_REL_TOLERANCE = 1e-6
ANSWER_ABS_TOLERANCE = 1e-9
NUM_OPTIONS = 4

FIELDS = (
    "id",
    "version",
    "split",
    "context",
    "question",
    "answer",
    "options",
    "program",
)


class Split(EnumWithDescription):
    TRAIN = "train", "Training split"
    TEST = "test", "Held-out evaluation split"


class DatasetVersion(EnumWithDescription):
    V1 = "v1", "First release: processes without altered conditions"
    V2 = "v2", "Second release: processes with altered conditions"


@dataclass(frozen=True)
class QAExample:
    id: str
    context: str
    question: str
    gold_answer: float
    reference_program: str
    options: tuple[float, ...]
    split: Split = Split.TRAIN
    version: DatasetVersion = DatasetVersion.V1

    def as_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "version": self.version.value,
            "split": self.split.value,
            "context": self.context,
            "question": self.question,
            "answer": self.gold_answer,
            "options": list(self.options),
            "program": self.reference_program,
        }

    @classmethod
    def from_dict(cls, record: Any) -> QAExample:
        """
        Build an example from a dataset record.

        :raises DatasetError: on missing fields or wrongly typed values
        """
        if not isinstance(record, dict):
            raise DatasetError("record is not a JSON object")
        missing = [name for name in FIELDS if name not in record]
        if missing:
            raise DatasetError(f"missing field(s): {', '.join(missing)}")

        for name in ("id", "context", "question", "program"):
            if not isinstance(record[name], str):
                raise DatasetError(f"field {name!r} must be a string")
        if not _is_number(record["answer"]):
            raise DatasetError("field 'answer' must be a number")
        options = record["options"]
        if not isinstance(options, list) or not all(_is_number(o) for o in options):
            raise DatasetError("field 'options' must be a list of numbers")

        split = Split.lookup(record["split"])
        if split is None:
            raise DatasetError(f"unknown split {record['split']!r}")
        version = DatasetVersion.lookup(record["version"])
        if version is None:
            raise DatasetError(f"unknown dataset version {record['version']!r}")

        return cls(
            id=record["id"],
            context=record["context"],
            question=record["question"],
            gold_answer=float(record["answer"]),
            reference_program=record["program"],
            options=tuple(float(option) for option in options),
            split=split,
            version=version,
        )


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def same_answer(left: float, right: float) -> bool:
    return math.isclose(
        left, right, rel_tol=ANSWER_REL_TOLERANCE, abs_tol=ANSWER_ABS_TOLERANCE
    )


def validation_error(example: QAExample, max_steps: int | None = None) -> str | None:
    """Why `example` is unusable, or None if it is valid."""
    if not math.isfinite(example.gold_answer):
        return "gold answer is not finite"

    if len(example.options) != NUM_OPTIONS:
        return f"expected {NUM_OPTIONS} options, got {len(example.options)}"
    if len(set(example.options)) != len(example.options):
        return "options are not pairwise distinct"
    if not any(same_answer(option, example.gold_answer) for option in example.options):
        return "gold answer is not among the options"

    try:
        program = parse_source(example.reference_program)
    except (LexError, ParseError) as exc:
        return f"reference program does not parse: {exc}"

    outcome = execute(program, max_steps)
    if outcome.fault is not None:
        return f"reference program fails: {outcome.fault}"
    answer = answer_of(outcome)
    if answer is None:
        return "reference program does not return a value"
    if not same_answer(answer, example.gold_answer):
        return (
            f"answer mismatch: reference program returns {answer:g}, "
            f"gold answer is {example.gold_answer:g}"
        )
    return None
