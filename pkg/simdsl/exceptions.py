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

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from simdsl.dsl.diagnostics import Diagnostic, Span
    from simdsl.interpreter.values import RuntimeErrorKind


class SimDslException(Exception):
    """Generic simdsl exception."""


class LexError(SimDslException):
    """
    Raised when the source contains a character outside the language's alphabet.

    Attributes:
        span: (start, end) byte offsets of the offending character
    """

    def __init__(self, message: str, span: Span) -> None:
        super().__init__(message)
        self.message = message
        self.span = span


class ParseError(SimDslException):
    """
    Raised when a token stream does not derive from the grammar.

    Every diagnostic carries a span into the source text.
    """

    def __init__(self, diagnostics: list[Diagnostic]) -> None:
        super().__init__(
            "; ".join(diagnostic.message for diagnostic in diagnostics)
            or "parse error"
        )
        self.diagnostics = diagnostics


class ExecutionFault(SimDslException):
    """
    A runtime error raised while executing a program.

    Attributes:
        kind: which runtime rule was violated
        step: index of the trace record the faulting instruction would have written
    """

    def __init__(self, kind: RuntimeErrorKind, step: int, message: str) -> None:
        super().__init__(message)
        self.kind = kind
        self.step = step
        self.message = message


class ConfigurationError(SimDslException):
    """
    Used if a configuration value is out of range or inconsistent with another.
    """

    def __init__(self, message: str) -> None:
        Exception.__init__(self, message)


class DatasetError(SimDslException):
    """
    Used on problems with a dataset as a whole. This includes but may not be limited to:
     * the file could not be found or read
     * the dataset is empty where examples are required
     * an unknown importer format was requested
    """

    def __init__(self, message: str) -> None:
        Exception.__init__(self, message)


class CheckpointError(SimDslException):
    """
    Used on problems loading or saving a policy checkpoint. This includes but may not
    be limited to:
     * the file could not be read or written
     * the file does not contain parseable JSON
     * the magic header or format version does not match
    """

    def __init__(self, message: str) -> None:
        Exception.__init__(self, message)


class TrainingDivergedError(SimDslException):
    """
    Raised when the training objective gets worse by more than the allowed margin
    between epochs.
    """

    def __init__(self, message: str, epoch: int, previous: float, current: float):
        Exception.__init__(self, message)
        self.epoch = epoch
        self.previous = previous
        self.current = current
