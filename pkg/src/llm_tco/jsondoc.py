"""Canonical JSON emission.

The CLI and the HTTP service must produce byte-identical documents for the
same data, and Decimal values must be emitted verbatim (as JSON numbers or
as quoted decimal strings) without a lossy float hop. json.dumps cannot do
the former, hence this small emitter. Layout mimics json.dumps(indent=2).
"""

from __future__ import annotations

import json
from decimal import Decimal
from fractions import Fraction
from typing import Any


class RawNumber:
    """A Decimal to be emitted unquoted, as a JSON number."""

    __slots__ = ("text",)

    def __init__(self, value: Decimal | int):
        self.text = str(value)


def _emit(value: Any, indent: int, out: list[str]) -> None:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, RawNumber):
        out.append(value.text)
    elif isinstance(value, Decimal):
        out.append(json.dumps(str(value)))
    elif isinstance(value, Fraction):
        out.append(json.dumps(str(value)))
    elif isinstance(value, bool) or value is None:
        out.append(json.dumps(value))
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        raise TypeError("refusing to serialize binary floats; use Decimal")
    elif isinstance(value, str):
        out.append(json.dumps(value, ensure_ascii=False))
    elif isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        out.append("{\n")
        for i, (key, item) in enumerate(value.items()):
            out.append(f"{inner}{json.dumps(str(key), ensure_ascii=False)}: ")
            _emit(item, indent + 1, out)
            out.append(",\n" if i < len(value) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(value, (list, tuple)):
        if not value:
            out.append("[]")
            return
        out.append("[\n")
        for i, item in enumerate(value):
            out.append(inner)
            _emit(item, indent + 1, out)
            out.append(",\n" if i < len(value) - 1 else "\n")
        out.append(pad + "]")
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps(value: Any) -> str:
    """Serialize to an indented JSON document with a trailing newline."""
    out: list[str] = []
    _emit(value, 0, out)
    return "".join(out) + "\n"
