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
Canonical formatting.

Layout works on lexemes rather than on the tree, so the same rules render
both parsed programs and raw token sequences produced by a policy:

    func simulation() {
        x = 0;
        repeat(5) {
            x = x + 2;
        }
        return x;
    }
"""
from __future__ import annotations

from collections.abc import Sequence

from .ast import (
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
from .tokens import is_identifier_lexeme, is_numeric_lexeme, tokenize

INDENT = "    "

_NO_SPACE_BEFORE = frozenset({"(", ")", ";"})


def _atom_lexemes(atom: Atom) -> list[str]:
    if isinstance(atom, Identifier):
        return [atom.name]
    if isinstance(atom, (IntLiteral, RealLiteral)):
        return ["-", atom.text] if atom.negative else [atom.text]
    raise TypeError(f"Not an atom: {atom!r}")


def _statement_lexemes(statement: Statement) -> list[str]:
    if isinstance(statement, Assign):
        out = [statement.target.name, "="]
        if isinstance(statement.rhs, BinaryExpr):
            out += _atom_lexemes(statement.rhs.left)
            out.append(statement.rhs.op.value)
            out += _atom_lexemes(statement.rhs.right)
        else:
            out += _atom_lexemes(statement.rhs)
        return out + [";"]

    if isinstance(statement, Return):
        return ["return", *_atom_lexemes(statement.expr), ";"]

    if isinstance(statement, Repeat):
        out = ["repeat", "(", statement.count.text, ")", "{"]
        for inner in statement.body:
            out += _statement_lexemes(inner)
        return out + ["}"]

    if isinstance(statement, If):
        cond = statement.cond
        out = ["if", "(", cond.lhs.name, cond.op.value, *_atom_lexemes(cond.rhs)]
        out += [")", "{"]
        for inner in statement.body:
            out += _statement_lexemes(inner)
        return out + ["}"]

    raise TypeError(f"Not a statement: {statement!r}")


def program_lexemes(program: Program) -> list[str]:
    """The lexeme sequence a program was (or would be) written as."""
    out = ["func", "simulation", "(", ")", "{"]
    for statement in program.body:
        out += _statement_lexemes(statement)
    return out + ["}"]


def _is_operand(lexeme: str | None) -> bool:
    return lexeme is not None and (
        lexeme == ")" or is_numeric_lexeme(lexeme) or is_identifier_lexeme(lexeme)
    )


def format_lexemes(lexemes: Sequence[str]) -> str:
    """
    Lay out any lexeme sequence canonically.

    A `-` directly before a numeric literal is glued to it unless it follows
    an operand, in which case it is the binary operator. Unbalanced braces
    are tolerated so that malformed candidates can still be shown.
    """
    lines: list[str] = []
    line: list[str] = []
    depth = 0
    prev: str | None = None
    glue_next = False

    def flush() -> None:
        if line:
            lines.append(INDENT * depth + "".join(line))
            line.clear()

    for index, lexeme in enumerate(lexemes):
        if lexeme == "}":
            flush()
            depth = max(depth - 1, 0)
            lines.append(INDENT * depth + "}")
            prev = lexeme
            glue_next = False
            continue

        if line and not glue_next and lexeme not in _NO_SPACE_BEFORE and prev != "(":
            line.append(" ")
        line.append(lexeme)

        nxt = lexemes[index + 1] if index + 1 < len(lexemes) else None
        glue_next = (
            lexeme == "-"
            and nxt is not None
            and is_numeric_lexeme(nxt)
            and not _is_operand(prev)
        )
        prev = lexeme

        if lexeme == "{":
            flush()
            depth += 1
        elif lexeme == ";":
            flush()

    flush()
    return "\n".join(lines)


def pretty_print(program: Program) -> str:
    """Deterministic canonical source for a program."""
    return format_lexemes(program_lexemes(program))


def program_tokens(program_source: str) -> list[str]:
    """
    The lexeme sequence BLEU is computed over.

    Lexing is whitespace-insensitive, so `x=1;` and `x = 1;` agree.

    :raises LexError: if the source does not lex
    """
    return [token.lexeme for token in tokenize(program_source)]
