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

from collections import defaultdict
from collections.abc import Sequence
from dataclasses import dataclass, field
import logging
from typing import Any

from simdsl.dataset import QAExample, classify_complexity
from simdsl.dsl import parse_source
from simdsl.enum import EnumWithDescription
from simdsl.exceptions import LexError, ParseError
from simdsl.interpreter import ExecutionTrace, answer_of, execute
from simdsl.policy import PolicyModel, beam_search
from simdsl.utils import answers_match, nearest_option, ordered_map

from .config import HarnessConfig

logger = logging.getLogger(__name__)


class EvaluationMode(EnumWithDescription):
    EXACT = "exact", "The answer must equal the gold answer"
    MULTIPLE_CHOICE = "multiple_choice", "The answer picks the nearest option"


@dataclass(frozen=True)
class CandidateDiagnostic:
    rank: int
    source: str
    reason: str

    def as_dict(self) -> dict[str, Any]:
        return {"rank": self.rank, "source": self.source, "reason": self.reason}


@dataclass(frozen=True)
class Answer:
    answer: float | None
    program_source: str | None
    trace: ExecutionTrace | None
    logprob: float | None = None
    diagnostics: tuple[CandidateDiagnostic, ...] = ()

    def as_dict(self) -> dict[str, Any]:
        return {
            "answer": self.answer,
            "program": self.program_source,
            "logprob": self.logprob,
            "trace": self.trace.as_list() if self.trace is not None else None,
            "diagnostics": [diagnostic.as_dict() for diagnostic in self.diagnostics],
        }


def answer_question(
    model: PolicyModel, context: str, question: str, config: HarnessConfig
) -> Answer:
    """
    Generate a program for the question and run it.

    Candidates are tried in log-probability order; the first one that parses
    and returns a value answers the question, and its source and trace come
    back with the answer. The reasons earlier candidates were rejected are
    kept in `diagnostics`.
    """
    candidates = beam_search(
        model, context, question, config.beam_width, config.n, config.max_len
    )
    diagnostics = []
    for rank, candidate in enumerate(candidates):
        source = candidate.source
        if not candidate.finished:
            reason = f"no end of sequence within {config.max_len} tokens"
        else:
            try:
                program = parse_source(source)
            except (LexError, ParseError) as exc:
                reason = f"does not parse: {exc}"
            else:
                outcome = execute(program, config.max_steps)
                answer = answer_of(outcome)
                if answer is not None:
                    return Answer(
                        answer,
                        source,
                        outcome.trace,
                        candidate.logprob,
                        tuple(diagnostics),
                    )
                if outcome.fault is not None:
                    reason = f"runtime error: {outcome.fault}"
                else:
                    reason = "does not return a value"
        diagnostics.append(CandidateDiagnostic(rank, source, reason))

    logger.warning("No executable candidate among %d for %r", len(candidates), question)
    return Answer(None, None, None, None, tuple(diagnostics))


@dataclass(frozen=True)
class ExampleResult:
    id: str
    gold: float
    predicted: float | None
    chosen_option: float | None
    correct: bool
    version: str
    complexity: str
    program_source: str | None

    def as_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "gold": self.gold,
            "predicted": self.predicted,
            "chosen_option": self.chosen_option,
            "correct": self.correct,
            "version": self.version,
            "complexity": self.complexity,
            "program": self.program_source,
        }


@dataclass(frozen=True)
class EvaluationReport:
    mode: EvaluationMode
    results: list[ExampleResult]
    by_version: dict[str, float] = field(default_factory=dict)
    by_complexity: dict[str, float] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def correct(self) -> int:
        return sum(result.correct for result in self.results)

    @property
    def accuracy(self) -> float:
        return self.correct / self.total if self.results else 0.0

    def as_dict(self, include_results: bool = True) -> dict[str, Any]:
        data: dict[str, Any] = {
            "mode": self.mode.value,
            "accuracy": self.accuracy,
            "correct": self.correct,
            "total": self.total,
            "by_version": self.by_version,
            "by_complexity": self.by_complexity,
        }
        if include_results:
            data["results"] = [result.as_dict() for result in self.results]
        return data


def _accuracy_by(results: Sequence[ExampleResult], key: str) -> dict[str, float]:
    groups: dict[str, list[bool]] = defaultdict(list)
    for result in results:
        groups[getattr(result, key)].append(result.correct)
    return {name: sum(flags) / len(flags) for name, flags in sorted(groups.items())}


def evaluate_example(
    model: PolicyModel,
    example: QAExample,
    config: HarnessConfig,
    mode: EvaluationMode,
) -> ExampleResult:
    answer = answer_question(model, example.context, example.question, config)
    predicted = answer.answer

    chosen = None
    if mode is EvaluationMode.MULTIPLE_CHOICE:
        if predicted is not None:
            chosen = nearest_option(predicted, example.options)
        correct = chosen is not None and answers_match(chosen, example.gold_answer)
    else:
        correct = answers_match(predicted, example.gold_answer)

    return ExampleResult(
        id=example.id,
        gold=example.gold_answer,
        predicted=predicted,
        chosen_option=chosen,
        correct=correct,
        version=example.version.value,
        complexity=classify_complexity(example, config.max_steps).label.value,
        program_source=answer.program_source,
    )


def evaluate_accuracy(
    model: PolicyModel,
    test_set: Sequence[QAExample],
    config: HarnessConfig,
    mode: EvaluationMode = EvaluationMode.EXACT,
) -> EvaluationReport:
    """
    Fraction of questions answered correctly; unanswered ones count as wrong.

    In multiple-choice mode the prediction is made without seeing the
    options and then mapped to the nearest one.
    """
    results = ordered_map(
        lambda example: evaluate_example(model, example, config, mode),
        test_set,
        config.workers,
    )
    report = EvaluationReport(
        mode,
        results,
        by_version=_accuracy_by(results, "version"),
        by_complexity=_accuracy_by(results, "complexity"),
    )
    logger.info(
        "Accuracy (%s) %.4f on %d examples", mode.value, report.accuracy, report.total
    )
    return report
