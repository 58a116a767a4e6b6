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

import logging
import math

from simdsl.const import DEFAULT_MAX_PROGRAM_TOKENS, INT_MAX
from simdsl.exceptions import ParseError

from .ast import (
    ArithOp,
    Assign,
    Atom,
    BinaryExpr,
    CompareOp,
    Condition,
    Identifier,
    If,
    IntLiteral,
    Program,
    RealLiteral,
    Repeat,
    Return,
    Statement,
)
from .diagnostics import Diagnostic, Span
from .tokens import Token, TokenKind, tokenize

logger = logging.getLogger(__name__)

MAX_DIAGNOSTICS = 20
MAX_NESTING = 64
# 2**63 has 19 digits.
MAX_INT_DIGITS = 19


class _StatementAbort(Exception):
    """Unwinds to the enclosing statement list, which resynchronises."""


class Parser:
    """
    Recursive descent parser for the simulation language.

    Errors inside a statement are recorded and the parser skips to the end
    of that statement, so one pass can report several independent problems.
    """

    def __init__(
        self,
        tokens: list[Token],
        source_length: int | None = None,
        max_tokens: int = DEFAULT_MAX_PROGRAM_TOKENS,
    ) -> None:
        self._tokens = tokens
        self._pos = 0
        self._max_tokens = max_tokens
        self._depth = 0
        self.diagnostics: list[Diagnostic] = []

        if source_length is None:
            source_length = tokens[-1].span[1] if tokens else 0
        self._eof_span: Span = (source_length, source_length)

    def parse(self) -> Program:
        if len(self._tokens) > self._max_tokens:
            self._error(
                f"program exceeds {self._max_tokens} tokens",
                self._tokens[self._max_tokens].span,
            )
            raise ParseError(self.diagnostics)

        try:
            program = self._program()
        except _StatementAbort:
            program = None

        if self.diagnostics or program is None:
            logger.debug("Parse failed with %d diagnostics", len(self.diagnostics))
            raise ParseError(self.diagnostics)

        return program

    # Token stream helpers

    def _peek(self, offset: int = 0) -> Token | None:
        index = self._pos + offset
        if index < len(self._tokens):
            return self._tokens[index]
        return None

    def _current_span(self) -> Span:
        token = self._peek()
        return token.span if token else self._eof_span

    def _advance(self) -> Token:
        token = self._tokens[self._pos]
        self._pos += 1
        return token

    def _describe(self, token: Token | None) -> str:
        if token is None:
            return "end of input"
        return f"{token.kind.value} {token.lexeme!r}"

    def _error(self, message: str, span: Span) -> None:
        if len(self.diagnostics) < MAX_DIAGNOSTICS:
            self.diagnostics.append(Diagnostic(message, span))

    def _fail(self, message: str, span: Span | None = None) -> _StatementAbort:
        self._error(message, span if span is not None else self._current_span())
        return _StatementAbort()

    def _expect_punct(self, lexeme: str, context: str) -> Token:
        token = self._peek()
        if token is not None and token.is_punct(lexeme):
            return self._advance()
        raise self._fail(
            f"expected {lexeme!r} {context}, found {self._describe(token)}"
        )

    def _expect_keyword(self, lexeme: str) -> Token:
        token = self._peek()
        if token is not None and token.is_keyword(lexeme):
            return self._advance()
        raise self._fail(f"expected {lexeme!r}, found {self._describe(token)}")

    def _synchronise(self) -> None:
        """Skip to just after the current statement, honouring nested blocks."""
        depth = 0
        while (token := self._peek()) is not None:
            if token.is_punct(";") and depth == 0:
                self._advance()
                return
            if token.is_punct("{"):
                depth += 1
            elif token.is_punct("}"):
                if depth == 0:
                    return
                depth -= 1
                if depth == 0:
                    self._advance()
                    return
            self._advance()

    # Grammar

    def _program(self) -> Program:
        start = self._expect_keyword("func").span[0]
        self._expect_keyword("simulation")
        self._expect_punct("(", "after 'simulation'")
        self._expect_punct(")", "(simulation takes no parameters)")
        body, end = self._block("function body")

        trailing = self._peek()
        if trailing is not None:
            self._error(
                f"unexpected {self._describe(trailing)} after the end of simulation()",
                trailing.span,
            )
        return Program(body, (start, end))

    def _block(self, what: str) -> tuple[tuple[Statement, ...], int]:
        """Parse `{ s }`, returning the statements and the offset after `}`."""
        self._expect_punct("{", f"to open the {what}")
        if self._depth >= MAX_NESTING:
            raise self._fail(f"blocks may be nested at most {MAX_NESTING} deep")
        self._depth += 1
        try:
            return self._block_body(what)
        finally:
            self._depth -= 1

    def _block_body(self, what: str) -> tuple[tuple[Statement, ...], int]:
        statements: list[Statement] = []
        failed = False

        while True:
            token = self._peek()
            if token is None:
                raise self._fail(f"expected '}}' to close the {what}")
            if token.is_punct("}"):
                break
            try:
                statements.append(self._statement())
            except _StatementAbort:
                failed = True
                self._synchronise()

        close = self._advance()
        # A block whose statements all failed has been reported already.
        if not statements and not failed:
            self._error(f"the {what} must contain at least one statement", close.span)
        return tuple(statements), close.span[1]

    def _statement(self) -> Statement:
        token = self._peek()
        assert token is not None

        if token.is_keyword("repeat"):
            return self._repeat()
        if token.is_keyword("if"):
            return self._if()
        if token.is_keyword("return"):
            return self._return()
        if token.kind is TokenKind.IDENTIFIER:
            return self._assign()
        if token.kind is TokenKind.KEYWORD:
            raise self._fail(
                f"{token.lexeme!r} is a reserved keyword and cannot start a statement",
                token.span,
            )
        raise self._fail(f"expected a statement, found {self._describe(token)}")

    def _repeat(self) -> Repeat:
        start = self._advance().span[0]
        self._expect_punct("(", "after 'repeat'")

        token = self._peek()
        if token is None or token.kind is not TokenKind.INT:
            raise self._fail(
                "repeat count must be a non-negative integer literal, "
                f"found {self._describe(token)}"
            )
        count = self._int_literal(self._advance(), negative=False)

        self._expect_punct(")", "after the repeat count")
        body, end = self._block("repeat body")
        return Repeat(count, body, (start, end))

    def _if(self) -> If:
        start = self._advance().span[0]
        self._expect_punct("(", "after 'if'")
        cond = self._condition()
        self._expect_punct(")", "after the condition")
        body, end = self._block("if body")
        return If(cond, body, (start, end))

    def _condition(self) -> Condition:
        token = self._peek()
        if token is None or token.kind is not TokenKind.IDENTIFIER:
            raise self._fail(
                "condition left-hand side must be an identifier, "
                f"found {self._describe(token)}"
            )
        lhs = Identifier(token.lexeme, token.span)
        self._advance()

        op_token = self._peek()
        if op_token is None or op_token.kind is not TokenKind.COMPARISON:
            raise self._fail(
                f"expected a comparison operator, found {self._describe(op_token)}"
            )
        self._advance()

        rhs = self._atom()
        span = (lhs.span[0], rhs.span[1])
        return Condition(lhs, CompareOp(op_token.lexeme), rhs, span)

    def _return(self) -> Return:
        start = self._advance().span[0]
        expr = self._atom()
        if (token := self._peek()) is not None and token.kind is TokenKind.ARITH:
            raise self._fail(
                "return takes a single identifier or literal, "
                "not an arithmetic expression",
                token.span,
            )
        end = self._expect_punct(";", "after the return value").span[1]
        return Return(expr, (start, end))

    def _assign(self) -> Assign:
        target_token = self._advance()
        target = Identifier(target_token.lexeme, target_token.span)

        token = self._peek()
        if token is None or token.kind is not TokenKind.ASSIGN:
            raise self._fail(
                f"expected '=' after {target.name!r}, found {self._describe(token)}"
            )
        self._advance()

        rhs: Atom | BinaryExpr = self._atom()
        if (op_token := self._peek()) is not None and op_token.kind is TokenKind.ARITH:
            self._advance()
            right = self._atom()
            span = (rhs.span[0], right.span[1])
            rhs = BinaryExpr(rhs, ArithOp(op_token.lexeme), right, span)

            if (extra := self._peek()) is not None and extra.kind is TokenKind.ARITH:
                raise self._fail(
                    "an assignment may contain at most one binary operator",
                    extra.span,
                )

        end = self._expect_punct(";", "after the assignment").span[1]
        return Assign(target, rhs, (target.span[0], end))

    def _atom(self) -> Atom:
        token = self._peek()
        if token is None:
            raise self._fail("expected an identifier or literal, found end of input")

        if token.kind is TokenKind.IDENTIFIER:
            self._advance()
            return Identifier(token.lexeme, token.span)
        if token.kind is TokenKind.INT:
            return self._int_literal(self._advance(), negative=False)
        if token.kind is TokenKind.REAL:
            self._advance()
            return self._real_literal(token, negative=False)

        if token.kind is TokenKind.ARITH and token.lexeme == "-":
            operand = self._peek(1)
            if operand is None or operand.kind not in (TokenKind.INT, TokenKind.REAL):
                raise self._fail(
                    "negation only applies to integer or real literals",
                    token.span,
                )
            if operand.span[0] != token.span[1]:
                raise self._fail(
                    "no whitespace is allowed between '-' and the literal",
                    (token.span[0], operand.span[1]),
                )
            self._advance()
            self._advance()
            span = (token.span[0], operand.span[1])
            if operand.kind is TokenKind.INT:
                return self._int_literal(operand, negative=True, span=span)
            return self._real_literal(operand, negative=True, span=span)

        if token.is_punct("("):
            raise self._fail("parenthesised expressions are not part of the language")
        if token.kind is TokenKind.KEYWORD:
            raise self._fail(
                f"{token.lexeme!r} is a reserved keyword and cannot be used as a value"
            )
        raise self._fail(
            f"expected an identifier or literal, found {self._describe(token)}"
        )

    def _int_literal(
        self, token: Token, negative: bool, span: Span | None = None
    ) -> IntLiteral:
        literal = IntLiteral(token.lexeme, negative, span or token.span)
        limit = INT_MAX + 1 if negative else INT_MAX
        digits = token.lexeme.lstrip("0")
        # Longer digit strings cannot fit and may exceed int()'s conversion limit.
        if len(digits) > MAX_INT_DIGITS or int(token.lexeme) > limit:
            raise self._fail("integer literal does not fit in 64 bits", literal.span)
        return literal

    def _real_literal(
        self, token: Token, negative: bool, span: Span | None = None
    ) -> RealLiteral:
        literal = RealLiteral(token.lexeme, negative, span or token.span)
        if not math.isfinite(literal.value):
            raise self._fail("real literal is too large for a double", literal.span)
        return literal


def parse(
    tokens: list[Token],
    source_length: int | None = None,
    max_tokens: int = DEFAULT_MAX_PROGRAM_TOKENS,
) -> Program:
    """
    Build a validated Program from a token stream.

    :raises ParseError: carrying every diagnostic found
    """
    return Parser(tokens, source_length, max_tokens).parse()


def parse_source(source: str, max_tokens: int = DEFAULT_MAX_PROGRAM_TOKENS) -> Program:
    """
    Tokenize and parse in one go.

    :raises LexError: on characters outside the alphabet
    :raises ParseError: on grammar violations
    """
    return parse(tokenize(source), len(source.encode("utf-8")), max_tokens)
