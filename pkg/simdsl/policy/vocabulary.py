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
Closed token vocabulary for program generation.

Numbers cannot be covered by a closed vocabulary, so every distinct number
found in the context and question is exposed through a COPY slot:
`<copy_0>` stands for the first number mentioned, `<copy_1>` for the
second, and so on. Slots are bound per query.
"""
from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
import logging
import re

import numpy as np

from simdsl.dsl.tokens import is_identifier_lexeme, is_numeric_lexeme
from simdsl.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

BOS = "<bos>"
EOS = "<eos>"
UNK = "<unk>"

MAX_COPY_SLOTS = 12
MAX_IDENTIFIERS = 32
MAX_LITERALS = 32

DSL_TOKENS = (
    "func",
    "simulation",
    "repeat",
    "if",
    "return",
    "(",
    ")",
    "{",
    "}",
    ";",
    "=",
    "+",
    "-",
    "*",
    "/",
    "//",
    "<",
    ">",
    "<=",
    ">=",
    "==",
    "!=",
)

NUMBER_RE = re.compile(r"\d+(?:\.\d+)?")
WORD_RE = re.compile(r"[a-z]+")
COPY_RE = re.compile(r"<copy_(\d+)>")


def copy_token(slot: int) -> str:
    return f"<copy_{slot}>"


@dataclass(frozen=True)
class Query:
    """What the policy conditions on: the context and question text."""

    context: str
    question: str
    numbers: tuple[str, ...] = field(init=False, compare=False)
    words: tuple[str, ...] = field(init=False, compare=False)

    def __post_init__(self) -> None:
        text = f"{self.context}\n{self.question}"
        object.__setattr__(
            self, "numbers", tuple(dict.fromkeys(NUMBER_RE.findall(text)))
        )
        object.__setattr__(
            self, "words", tuple(sorted(set(WORD_RE.findall(text.lower()))))
        )


@dataclass(frozen=True)
class CoverageReport:
    total_tokens: int
    unknown_tokens: int
    unknown: dict[str, int]

    @property
    def unk_rate(self) -> float:
        if not self.total_tokens:
            return 0.0
        return self.unknown_tokens / self.total_tokens


class Vocabulary:
    """
    An ordered, duplicate-free list of token strings.

    EOS is mandatory. BOS is never predicted, so it is not part of the
    list: models use index `len(vocabulary)` as the "before the start"
    context.
    """

    def __init__(self, tokens: Sequence[str]) -> None:
        if EOS not in tokens:
            raise ConfigurationError(f"vocabulary must contain {EOS}")
        if len(set(tokens)) != len(tokens):
            raise ConfigurationError("vocabulary tokens must be unique")

        self.tokens: tuple[str, ...] = tuple(tokens)
        self._index = {token: i for i, token in enumerate(self.tokens)}
        self.eos_id = self._index[EOS]
        self.unk_id: int | None = self._index.get(UNK)

        self._copy_ids: dict[int, int] = {}
        for i, token in enumerate(self.tokens):
            if match := COPY_RE.fullmatch(token):
                self._copy_ids[int(match.group(1))] = i

        self._numeric_ids = np.array(
            [i for i, token in enumerate(self.tokens) if is_numeric_lexeme(token)],
            dtype=np.intp,
        )

    @classmethod
    def build(
        cls,
        programs: Iterable[tuple[Sequence[str], Query]],
        max_identifiers: int = MAX_IDENTIFIERS,
        max_literals: int = MAX_LITERALS,
        copy_slots: int = MAX_COPY_SLOTS,
    ) -> Vocabulary:
        """
        Harvest identifier and literal pools from training programs.

        Literals that can be copied from their own query do not need a pool
        entry. Pools keep the most frequent entries, ties in order of first
        appearance.
        """
        identifiers: Counter[str] = Counter()
        literals: Counter[str] = Counter()
        for lexemes, query in programs:
            for lexeme in lexemes:
                if lexeme in DSL_TOKENS:
                    continue
                if is_identifier_lexeme(lexeme):
                    identifiers[lexeme] += 1
                elif is_numeric_lexeme(lexeme):
                    slot = _slot_of(lexeme, query)
                    if slot is None or slot >= copy_slots:
                        literals[lexeme] += 1

        tokens = [EOS, UNK, *DSL_TOKENS]
        tokens += [name for name, _ in identifiers.most_common(max_identifiers)]
        tokens += [lexeme for lexeme, _ in literals.most_common(max_literals)]
        tokens += [copy_token(slot) for slot in range(copy_slots)]

        if len(identifiers) > max_identifiers or len(literals) > max_literals:
            logger.warning(
                "Vocabulary pools truncated: %d identifiers, %d literals seen",
                len(identifiers),
                len(literals),
            )
        return cls(tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def __getitem__(self, index: int) -> str:
        return self.tokens[index]

    def __contains__(self, token: object) -> bool:
        return token in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Vocabulary) and self.tokens == other.tokens

    def __hash__(self) -> int:
        return hash(self.tokens)

    def __repr__(self) -> str:
        return f"Vocabulary({len(self)} tokens)"

    def index(self, token: str) -> int:
        return self._index[token]

    @property
    def copy_slots(self) -> int:
        return len(self._copy_ids)

    def query(self, context: str, question: str) -> Query:
        return Query(context, question)

    def _encode_one(self, lexeme: str, query: Query) -> int | None:
        if is_numeric_lexeme(lexeme):
            slot = _slot_of(lexeme, query)
            if slot is not None and slot in self._copy_ids:
                return self._copy_ids[slot]
        return self._index.get(lexeme)

    def encode(self, lexemes: Iterable[str], query: Query) -> list[int]:
        """Map program lexemes to ids, preferring a COPY slot for numbers."""
        ids = []
        for lexeme in lexemes:
            token_id = self._encode_one(lexeme, query)
            if token_id is None:
                if self.unk_id is None:
                    raise ConfigurationError(
                        f"{lexeme!r} is not in the vocabulary and there is no {UNK}"
                    )
                token_id = self.unk_id
            ids.append(token_id)
        return ids

    def lexeme(self, token_id: int, query: Query) -> str:
        token = self.tokens[token_id]
        if match := COPY_RE.fullmatch(token):
            slot = int(match.group(1))
            if slot < len(query.numbers):
                return query.numbers[slot]
            return UNK
        return token

    def decode(self, token_ids: Iterable[int], query: Query) -> list[str]:
        """Lexemes up to (not including) the first EOS."""
        lexemes = []
        for token_id in token_ids:
            if token_id == self.eos_id:
                break
            lexemes.append(self.lexeme(token_id, query))
        return lexemes

    def allowed_mask(self, query: Query) -> np.ndarray:
        """COPY slots with no number behind them cannot be generated."""
        mask = np.ones(len(self), dtype=bool)
        for slot, token_id in self._copy_ids.items():
            if slot >= len(query.numbers):
                mask[token_id] = False
        return mask

    def mentioned_mask(self, query: Query) -> np.ndarray:
        """Tokens that stand for a number occurring in the context or question."""
        mask = np.zeros(len(self), dtype=bool)
        for slot, token_id in self._copy_ids.items():
            mask[token_id] = slot < len(query.numbers)
        if len(self._numeric_ids):
            numbers = set(query.numbers)
            for token_id in self._numeric_ids:
                mask[token_id] = self.tokens[token_id] in numbers
        return mask

    def coverage(
        self, programs: Iterable[tuple[Sequence[str], Query]]
    ) -> CoverageReport:
        total = 0
        unknown: Counter[str] = Counter()
        for lexemes, query in programs:
            for lexeme in lexemes:
                total += 1
                if self._encode_one(lexeme, query) is None:
                    unknown[lexeme] += 1
        return CoverageReport(total, sum(unknown.values()), dict(unknown))


def _slot_of(lexeme: str, query: Query) -> int | None:
    try:
        return query.numbers.index(lexeme)
    except ValueError:
        return None
