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
from enum import Enum
import re

from simdsl.exceptions import LexError

from .diagnostics import Span


class TokenKind(Enum):
    KEYWORD = "keyword"
    IDENTIFIER = "identifier"
    INT = "int"
    REAL = "real"
    COMPARISON = "comparison"
    ARITH = "arith"
    ASSIGN = "assign"
    PUNCT = "punct"


KEYWORDS = frozenset({"func", "simulation", "repeat", "if", "return"})

IDENTIFIER_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")
INT_RE = re.compile(r"[0-9]+")
REAL_RE = re.compile(r"[0-9]+\.[0-9]+")

# Alternatives are tried in order, so longer operators come first:
# `>=` before `>`, `==` before `=`, `//` before `/`.
_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n\f\v]+)
    |(?P<real>[0-9]+\.[0-9]+)
    |(?P<int>[0-9]+)
    |(?P<word>[a-zA-Z][a-zA-Z0-9_]*)
    |(?P<comparison>>=|<=|!=|==|<|>)
    |(?P<assign>=)
    |(?P<arith>//|[-+*/])
    |(?P<punct>[(){};])
    """,
    re.VERBOSE,
)

_GROUP_KIND = {
    "real": TokenKind.REAL,
    "int": TokenKind.INT,
    "comparison": TokenKind.COMPARISON,
    "assign": TokenKind.ASSIGN,
    "arith": TokenKind.ARITH,
    "punct": TokenKind.PUNCT,
}


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str
    span: Span

    def is_punct(self, lexeme: str) -> bool:
        return self.kind is TokenKind.PUNCT and self.lexeme == lexeme

    def is_keyword(self, lexeme: str) -> bool:
        return self.kind is TokenKind.KEYWORD and self.lexeme == lexeme


def tokenize(source: str) -> list[Token]:
    """
    Split source text into tokens using maximal munch.

    Whitespace is dropped. Every accepted character is ASCII, so character
    offsets and byte offsets agree up to the first lex error.

    :raises LexError: on a character outside the alphabet
    """
    tokens: list[Token] = []
    pos = 0
    length = len(source)

    while pos < length:
        match = _TOKEN_RE.match(source, pos)
        if match is None:
            char = source[pos]
            start = len(source[:pos].encode("utf-8"))
            raise LexError(
                f"unexpected character {char!r}",
                (start, start + len(char.encode("utf-8"))),
            )

        group = match.lastgroup
        lexeme = match.group()
        span = (pos, match.end())
        pos = match.end()

        if group == "ws":
            continue
        if group == "word":
            kind = TokenKind.KEYWORD if lexeme in KEYWORDS else TokenKind.IDENTIFIER
        else:
            kind = _GROUP_KIND[group]
        tokens.append(Token(kind, lexeme, span))

    return tokens


def is_numeric_lexeme(lexeme: str) -> bool:
    return bool(INT_RE.fullmatch(lexeme) or REAL_RE.fullmatch(lexeme))


def is_identifier_lexeme(lexeme: str) -> bool:
    return bool(IDENTIFIER_RE.fullmatch(lexeme)) and lexeme not in KEYWORDS
