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
Dataset loading.

The on-disk format is UTF-8 JSON-lines, one example per line:

    {"id": "...", "version": "v1", "split": "train", "context": "...",
     "question": "...", "answer": 16, "options": [14, 15, 16, 19],
     "program": "func simulation() { ... }"}

Other formats plug in through `IMPORTERS`: an importer reads a file and
yields (line number, record) pairs in that schema. Examples that fail
validation are quarantined in the report rather than raising.
"""
from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass, field
import logging
import pathlib
from typing import Any

from simdsl.exceptions import DatasetError
import simdsl.sdjson as sdjson

from .example import QAExample, validation_error

logger = logging.getLogger(__name__)

RawRecord = tuple[int, Any]
Importer = Callable[[pathlib.Path], Iterator[RawRecord]]

IMPORTERS: dict[str, Importer] = {}


class MalformedLine:
    """Stands in for a record whose line could not be decoded."""

    def __init__(self, reason: str) -> None:
        self.reason = reason


def register_importer(name: str) -> Callable[[Importer], Importer]:
    def decorator(importer: Importer) -> Importer:
        IMPORTERS[name] = importer
        return importer

    return decorator


@register_importer("jsonl")
def import_jsonl(location: pathlib.Path) -> Iterator[RawRecord]:
    with open(location, mode="rb") as fp:
        for line_number, raw in enumerate(fp, start=1):
            if not raw.strip():
                continue
            try:
                line = raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                yield line_number, MalformedLine(f"not valid UTF-8: {exc}")
                continue
            try:
                yield line_number, sdjson.loads(line)
            except sdjson.JSON_DECODE_EXCEPTIONS as exc:
                yield line_number, MalformedLine(f"malformed JSON: {exc}")


@dataclass(frozen=True)
class QuarantineEntry:
    line: int
    reason: str
    id: str | None = None

    def as_dict(self) -> dict[str, Any]:
        return {"line": self.line, "reason": self.reason, "id": self.id}


@dataclass
class LoadReport:
    loaded: int = 0
    quarantined: list[QuarantineEntry] = field(default_factory=list)
    by_version: dict[str, int] = field(default_factory=dict)
    by_split: dict[str, int] = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        return {
            "loaded": self.loaded,
            "quarantined": [entry.as_dict() for entry in self.quarantined],
            "by_version": self.by_version,
            "by_split": self.by_split,
        }


def validate_records(
    records: Iterable[RawRecord], max_steps: int | None = None
) -> tuple[list[QAExample], LoadReport]:
    examples: list[QAExample] = []
    report = LoadReport()
    seen_ids: set[str] = set()

    for line, record in records:
        if isinstance(record, MalformedLine):
            report.quarantined.append(QuarantineEntry(line, record.reason))
            continue
        try:
            example = QAExample.from_dict(record)
        except DatasetError as exc:
            record_id = record.get("id") if isinstance(record, dict) else None
            if not isinstance(record_id, str):
                record_id = None
            report.quarantined.append(QuarantineEntry(line, str(exc), record_id))
            continue

        reason = validation_error(example, max_steps)
        if reason is None and example.id in seen_ids:
            reason = f"duplicate id {example.id!r}"
        if reason is not None:
            report.quarantined.append(QuarantineEntry(line, reason, example.id))
            continue

        seen_ids.add(example.id)
        examples.append(example)

    for entry in report.quarantined:
        logger.debug("Quarantined line %d (%s): %s", entry.line, entry.id, entry.reason)

    report.loaded = len(examples)
    report.by_version = dict(Counter(example.version.value for example in examples))
    report.by_split = dict(Counter(example.split.value for example in examples))
    return examples, report


def load_dataset(
    location: pathlib.Path, format: str = "jsonl", max_steps: int | None = None
) -> tuple[list[QAExample], LoadReport]:
    """
    Load and validate a dataset.

    :raises DatasetError: if the file cannot be read or the format is unknown
    """
    try:
        importer = IMPORTERS[format]
    except KeyError:
        raise DatasetError(
            f"unknown dataset format {format!r}, known: {', '.join(sorted(IMPORTERS))}"
        )

    try:
        examples, report = validate_records(importer(location), max_steps)
    except OSError as exc:
        raise DatasetError(f"could not read dataset {location}: {exc}") from exc

    if report.quarantined:
        logger.warning(
            "Loaded %d examples from %s, quarantined %d",
            report.loaded,
            location,
            len(report.quarantined),
        )
    else:
        logger.info("Loaded %d examples from %s", report.loaded, location)
    return examples, report


def write_dataset(location: pathlib.Path, examples: Sequence[QAExample]) -> None:
    """
    :raises DatasetError: if the file cannot be written
    """
    try:
        with open(location, mode="w", encoding="utf-8") as fp:
            for example in examples:
                fp.write(sdjson.dumps(example.as_dict()))
                fp.write("\n")
    except OSError as exc:
        raise DatasetError(f"could not write dataset {location}: {exc}") from exc
