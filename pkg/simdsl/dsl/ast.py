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
Syntax tree for simulation programs.

Nodes are frozen dataclasses. Spans are carried for diagnostics but do not
take part in equality, so a reparsed pretty-print compares equal to the tree
it came from.
"""
from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import Enum
from typing import Union

from .diagnostics import Span


def _span() -> Span:
    return field(default=(0, 0), compare=False, repr=False)


class ArithOp(Enum):
    ADD = "+"
    SUB = "-"
    MUL = "*"
    DIV = "/"
    FLOORDIV = "//"


class CompareOp(Enum):
    LT = "<"
    GT = ">"
    GE = ">="
    LE = "<="
    NE = "!="
    EQ = "=="


class Node:
    span: Span

    def children(self) -> tuple[Node, ...]:
        return ()


@dataclass(frozen=True)
class Identifier(Node):
    name: str
    span: Span = _span()


@dataclass(frozen=True)
class IntLiteral(Node):
    # Digits exactly as written; the sign is kept apart so `-007` survives a round-trip.
    text: str
    negative: bool = False
    span: Span = _span()

    @property
    def value(self) -> int:
        return -int(self.text) if self.negative else int(self.text)


@dataclass(frozen=True)
class RealLiteral(Node):
    text: str
    negative: bool = False
    span: Span = _span()

    @property
    def value(self) -> float:
        return -float(self.text) if self.negative else float(self.text)


Atom = Union[Identifier, IntLiteral, RealLiteral]


@dataclass(frozen=True)
class BinaryExpr(Node):
    left: Atom
    op: ArithOp
    right: Atom
    span: Span = _span()

    def children(self) -> tuple[Node, ...]:
        return (self.left, self.right)


@dataclass(frozen=True)
class Condition(Node):
    lhs: Identifier
    op: CompareOp
    rhs: Atom
    span: Span = _span()

    def children(self) -> tuple[Node, ...]:
        return (self.lhs, self.rhs)


@dataclass(frozen=True)
class Assign(Node):
    target: Identifier
    rhs: Atom | BinaryExpr
    span: Span = _span()

    def children(self) -> tuple[Node, ...]:
        return (self.target, self.rhs)


@dataclass(frozen=True)
class Return(Node):
    expr: Atom
    span: Span = _span()

    def children(self) -> tuple[Node, ...]:
        return (self.expr,)


@dataclass(frozen=True)
class Repeat(Node):
    count: IntLiteral
    body: tuple[Statement, ...]
    span: Span = _span()

    def children(self) -> tuple[Node, ...]:
        return (self.count, *self.body)


@dataclass(frozen=True)
class If(Node):
    cond: Condition
    body: tuple[Statement, ...]
    span: Span = _span()

    def children(self) -> tuple[Node, ...]:
        return (self.cond, *self.body)


Statement = Union[Assign, Return, Repeat, If]


@dataclass(frozen=True)
class Program(Node):
    """`func simulation() { ... }`: exactly one function, no parameters."""

    body: tuple[Statement, ...]
    span: Span = _span()

    def children(self) -> tuple[Node, ...]:
        return self.body


def iter_nodes(node: Node) -> Iterator[Node]:
    """Pre-order walk over a node and all of its descendants."""
    yield node
    for child in node.children():
        yield from iter_nodes(child)


def count_nodes(program: Program, node_type: type[Node]) -> int:
    return sum(1 for node in iter_nodes(program) if isinstance(node, node_type))
