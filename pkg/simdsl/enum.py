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

import enum
from typing import Any, TypeVar

_EnumT = TypeVar("_EnumT", bound="EnumWithDescription")


class EnumWithDescription(enum.Enum):
    """An enum whose members are declared as `NAME = wire_value, "description"`.

    The wire value is what gets serialized (trace exports, CLI JSON); the
    description is what a person reads in a diagnostic.
    """

    def __new__(cls, value: Any, description: str | None = None) -> Any:
        obj = object.__new__(cls)
        obj._value_ = value
        return obj

    def __init__(self, _: Any, description: str | None = None) -> None:
        self._description = description

    def __str__(self) -> str:
        return str(self.value)

    @property
    def description(self) -> str:
        if self._description is None:
            return self.name.lower().replace("_", " ")
        return self._description

    @classmethod
    def wire_values(cls) -> list[str]:
        """Every wire value as a string, in declaration order (argparse choices)."""
        return [str(member.value) for member in cls]

    @classmethod
    def lookup(cls: type[_EnumT], value: Any) -> _EnumT | None:
        """The member with this wire value, or None."""
        try:
            return cls(value)
        except ValueError:
            return None
