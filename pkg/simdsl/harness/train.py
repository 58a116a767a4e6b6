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
REINFORCE fine-tuning with a syntactic/semantic reward.

For every example the policy beam-decodes N candidates, each candidate is
scored against the reference program, and the S best by reward (ties by
log-probability) join the batch. A full batch of B candidates is turned
into one update on

    L = -(1/B) * sum(Q_i * log p(candidate_i | context_i, question_i))

The partial batch left at the end of an epoch is flushed with the mean over
its actual size.
"""
from __future__ import annotations

from collections.abc import Sequence
import contextlib
from dataclasses import dataclass, field
import logging
import math
import pathlib
import random
import time
from typing import IO, Any

from simdsl.dataset import QAExample
from simdsl.dsl import program_tokens
from simdsl.exceptions import DatasetError
from simdsl.policy import (
    LogLinearPolicy,
    PolicyConfig,
    PolicyModel,
    PolicyTarget,
    PretrainResult,
    Query,
    Vocabulary,
    mle_pretrain,
    search,
)
import simdsl.sdjson as sdjson
from simdsl.similarity import RewardScorer, SimilarityScores
from simdsl.utils import ordered_map

from .config import HarnessConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScoredCandidate:
    query: Query
    # as scored by the policy: EOS appended when the candidate finished
    token_ids: tuple[int, ...]
    source: str
    logprob: float
    scores: SimilarityScores

    @property
    def q(self) -> float:
        return self.scores.q_combined

    def target(self) -> PolicyTarget:
        return PolicyTarget(self.query, self.token_ids, self.q)

    def as_dict(self) -> dict[str, Any]:
        return {
            "source": self.source,
            "logprob": self.logprob,
            "parseable": self.scores.parseable,
            "executable": self.scores.executable,
            **self.scores.as_dict(),
        }


@dataclass(frozen=True)
class TrainingRecord:
    epoch: int
    batch: int
    loss: float
    mean_q: float
    fraction_parseable: float
    fraction_executable: float
    size: int
    timestamp: float
    candidates: tuple[dict[str, Any], ...] | None = None

    def as_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "epoch": self.epoch,
            "batch": self.batch,
            "loss": self.loss,
            "mean_q": self.mean_q,
            "fraction_parseable": self.fraction_parseable,
            "fraction_executable": self.fraction_executable,
            "size": self.size,
            "timestamp": self.timestamp,
        }
        if self.candidates is not None:
            data["candidates"] = list(self.candidates)
        return data


@dataclass
class TrainResult:
    model: PolicyModel
    records: list[TrainingRecord] = field(default_factory=list)
    pretrain: PretrainResult | None = None

    def mean_q_by_epoch(self) -> list[float]:
        """Mean reward over every candidate that entered a batch, per epoch."""
        totals: dict[int, tuple[float, int]] = {}
        for record in self.records:
            q_sum, count = totals.get(record.epoch, (0.0, 0))
            totals[record.epoch] = (
                q_sum + record.mean_q * record.size,
                count + record.size,
            )
        return [q_sum / count for _, (q_sum, count) in sorted(totals.items())]


def build_vocabulary(examples: Sequence[QAExample]) -> Vocabulary:
    """Harvest a vocabulary from reference programs and report its coverage."""
    programs = [
        (
            program_tokens(example.reference_program),
            Query(example.context, example.question),
        )
        for example in examples
    ]
    vocabulary = Vocabulary.build(programs)
    coverage = vocabulary.coverage(programs)
    if coverage.unknown_tokens:
        logger.warning(
            "%d of %d reference tokens (%.2f%%) are unknown: %s",
            coverage.unknown_tokens,
            coverage.total_tokens,
            100 * coverage.unk_rate,
            ", ".join(sorted(coverage.unknown)),
        )
    else:
        logger.info(
            "Vocabulary of %d tokens covers every reference token", len(vocabulary)
        )
    return vocabulary


def initial_policy(
    examples: Sequence[QAExample], config: PolicyConfig | None = None
) -> LogLinearPolicy:
    return LogLinearPolicy(build_vocabulary(examples), config)


def score_candidates(
    model: PolicyModel,
    example: QAExample,
    scorer: RewardScorer,
    config: HarnessConfig,
) -> list[ScoredCandidate]:
    """Beam-decode N candidates and score each, in beam order."""
    vocabulary = model.vocabulary
    query = vocabulary.query(example.context, example.question)
    scored = []
    for beam in search(model, query, config.beam_width, config.n, config.max_len):
        source = beam.source
        token_ids = beam.token_ids + ((vocabulary.eos_id,) if beam.finished else ())
        scores = scorer.score(source)
        logger.debug("%s q=%.4f %r", example.id, scores.q_combined, source)
        scored.append(ScoredCandidate(query, token_ids, source, beam.logprob, scores))
    return scored


def select_top(
    candidates: Sequence[ScoredCandidate], s: int
) -> list[ScoredCandidate]:
    """The S highest rewards; ties go to the higher log-probability, then beam order."""
    order = sorted(
        range(len(candidates)),
        key=lambda index: (-candidates[index].q, -candidates[index].logprob, index),
    )
    return [candidates[index] for index in order[:s]]


class _Trainer:
    def __init__(
        self,
        model: PolicyModel,
        dataset: Sequence[QAExample],
        config: HarnessConfig,
        log: IO[str] | None,
    ) -> None:
        self.model = model
        self.dataset = dataset
        self.config = config
        self.log = log
        self.records: list[TrainingRecord] = []
        self.scorers = [
            RewardScorer(
                example.reference_program,
                config.reward,
                semantic=config.semantic_reward,
            )
            for example in dataset
        ]

    def _select(self, index: int) -> list[ScoredCandidate]:
        candidates = score_candidates(
            self.model, self.dataset[index], self.scorers[index], self.config
        )
        return select_top(candidates, self.config.s)

    def _flush(self, epoch: int, batch: list[ScoredCandidate]) -> None:
        size = len(batch)
        loss = self.model.reinforce_update(
            [candidate.target() for candidate in batch], self.config.learning_rate
        )
        record = TrainingRecord(
            epoch=epoch,
            batch=len(self.records) + 1,
            loss=loss,
            mean_q=sum(candidate.q for candidate in batch) / size,
            fraction_parseable=sum(c.scores.parseable for c in batch) / size,
            fraction_executable=sum(c.scores.executable for c in batch) / size,
            size=size,
            timestamp=time.time(),
            candidates=(
                tuple(candidate.as_dict() for candidate in batch)
                if self.config.log_candidates
                else None
            ),
        )
        logger.debug(
            "Epoch %d batch %d: loss %.4f mean Q %.4f",
            epoch,
            record.batch,
            record.loss,
            record.mean_q,
        )
        self.records.append(record)
        if self.log is not None:
            self.log.write(sdjson.dumps(record.as_dict()))
            self.log.write("\n")
            self.log.flush()

    def run_epoch(self, epoch: int, order: list[int]) -> None:
        config = self.config
        pending: list[ScoredCandidate] = []
        position = 0
        while position < len(order):
            # Examples decoded together must all precede the next update.
            room = config.batch_size - len(pending)
            window = order[position : position + math.ceil(room / config.s)]
            position += len(window)

            for selected in ordered_map(self._select, window, config.workers):
                for candidate in selected:
                    pending.append(candidate)
                    if len(pending) == config.batch_size:
                        self._flush(epoch, pending)
                        pending = []

        if pending:
            self._flush(epoch, pending)


def reinforce_train(
    model: PolicyModel,
    dataset: Sequence[QAExample],
    config: HarnessConfig,
    log_path: pathlib.Path | None = None,
) -> TrainResult:
    """
    Fine-tune `model` in place with REINFORCE; pre-train it first when
    `config.pretrain` is set.

    Every example's reference program must parse; load datasets with
    `load_dataset` to guarantee that.

    :raises DatasetError: if the dataset is empty
    :raises TrainingDivergedError: if pre-training diverges
    """
    if not dataset:
        raise DatasetError("cannot train on an empty dataset")

    result = TrainResult(model)
    if config.pretrain:
        result.pretrain = mle_pretrain(
            model,
            dataset,
            config.pretrain_epochs,
            config.pretrain_learning_rate,
            config.pretrain_batch_size,
            config.seed,
        )

    rng = random.Random(config.seed)
    with contextlib.ExitStack() as stack:
        log = (
            stack.enter_context(open(log_path, mode="w", encoding="utf-8"))
            if log_path is not None
            else None
        )
        trainer = _Trainer(model, dataset, config, log)
        for epoch in range(1, config.epochs + 1):
            order = list(range(len(dataset)))
            rng.shuffle(order)
            first = len(trainer.records)
            trainer.run_epoch(epoch, order)

            batches = trainer.records[first:]
            logger.info(
                "Epoch %d: %d batches, mean Q %.4f",
                epoch,
                len(batches),
                sum(r.mean_q * r.size for r in batches) / sum(r.size for r in batches),
            )
        result.records = trainer.records

    return result
