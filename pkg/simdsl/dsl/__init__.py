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

from .ast import (
    ArithOp,
    Assign,
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
    count_nodes,
    iter_nodes,
)
from .diagnostics import Diagnostic, Severity, Span, line_col
from .parser import Parser, parse, parse_source
from .printer import format_lexemes, pretty_print, program_lexemes, program_tokens
from .tokens import KEYWORDS, Token, TokenKind, tokenize

__all__ = [
    "ArithOp",
    "Assign",
    "BinaryExpr",
    "CompareOp",
    "Condition",
    "Diagnostic",
    "Identifier",
    "If",
    "IntLiteral",
    "KEYWORDS",
    "Parser",
    "Program",
    "RealLiteral",
    "Repeat",
    "Return",
    "Severity",
    "Span",
    "Token",
    "TokenKind",
    "count_nodes",
    "format_lexemes",
    "iter_nodes",
    "line_col",
    "parse",
    "parse_source",
    "pretty_print",
    "program_lexemes",
    "program_tokens",
    "tokenize",
]
