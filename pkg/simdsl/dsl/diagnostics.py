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

# (start, end) byte offsets, end exclusive.
Span = tuple[int, int]


class Severity(Enum):
    ERROR = "error"


@dataclass(frozen=True)
class Diagnostic:
    message: str
    span: Span
    severity: Severity = Severity.ERROR

    def format(self, source: str, filename: str = "<input>") -> str:
        """Render as `<file>:<line>:<col>: error: <message>`."""
        line, col = line_col(source, self.span[0])
        return f"{filename}:{line}:{col}: {self.severity.value}: {self.message}"


def line_col(source: str, offset: int) -> tuple[int, int]:
    """
    Convert a byte offset into a 1-based (line, column) pair.

    line_col("x = 1;\\ny", 7) == (2, 1)
    """
    prefix = source.encode("utf-8")[:offset].decode("utf-8", errors="replace")
    line = prefix.count("\n") + 1
    col = len(prefix) - (prefix.rfind("\n") + 1) + 1
    return line, col
