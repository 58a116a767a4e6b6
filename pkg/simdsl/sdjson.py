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

import json
from typing import Any

import commentjson
import orjson

JSON_ENCODE_EXCEPTIONS = (TypeError, ValueError, orjson.JSONEncodeError)
JSON_DECODE_EXCEPTIONS = (json.JSONDecodeError, orjson.JSONDecodeError)

_DUMP_OPTIONS = orjson.OPT_NON_STR_KEYS | orjson.OPT_SERIALIZE_NUMPY


def loads(s: str | bytes | bytearray | memoryview) -> Any:
    """Load json or fallback to commentjson.

    Dataset files are often edited by hand, and people leave trailing
    commas and `//` comments in them. orjson is tried first so that
    only the sloppy lines pay for the second, slower decode.
    """
    try:
        return orjson.loads(s)
    except orjson.JSONDecodeError as err:
        if isinstance(s, (bytes, bytearray, memoryview)):
            s = bytes(s).decode("utf-8", errors="replace")
        try:
            return commentjson.loads(s)
        except Exception:
            # commentjson leaks its parser's exception types; report the strict error.
            raise err from None


def dumps(data: Any) -> str:
    """Compact JSON, one line. Used for JSON-lines output."""
    return dump_bytes(data).decode("utf-8")


def dump_bytes(data: Any) -> bytes:
    """Compact JSON as bytes.

    Ints are written without a decimal point and floats always with one,
    which the trace export relies on to keep Int and Real apart.
    """
    return orjson.dumps(data, option=_DUMP_OPTIONS)


def dumps_indented(data: Any) -> str:
    """JSON encoder that uses orjson with indent."""
    return orjson.dumps(
        data,
        option=orjson.OPT_INDENT_2 | _DUMP_OPTIONS,
    ).decode("utf-8")
