"""JSON encoding of exact results.

Rationals are written as ``"num/den"`` strings (``"5/16"``, ``"-1/4"``,
``"3/1"``) and never as floats, so a record decodes back to the identical
:class:`~fractions.Fraction` values. Python ints stay JSON integers. Complex
numbers from the floating-point route become ``{"re", "im", "approximate"}``
objects.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, fields, is_dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

__all__ = ["OutputRecord", "to_jsonable", "from_jsonable", "dumps", "loads", "format_rational"]

_RATIONAL_RE = re.compile(r"^-?\d+/\d+$")


class Kind(str, Enum):
    VALUE = "value"
    VECTOR = "vector"
    REPORT = "report"


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, float):
        return {"approximate": True, "value": obj}
    if isinstance(obj, complex):
        return {"approximate": True, "re": obj.real, "im": obj.imag}
    if isinstance(obj, Enum):
        return obj.value
    if is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(v) for v in items]
    if hasattr(obj, "item"):  # numpy scalars
        return to_jsonable(obj.item())
    raise TypeError(f"cannot encode {type(obj).__name__}")


def from_jsonable(obj: Any) -> Any:
    """Inverse of :func:`to_jsonable` for rationals: every ``"num/den"`` string becomes a Fraction."""
    if isinstance(obj, str) and _RATIONAL_RE.match(obj):
        num, den = obj.split("/")
        return Fraction(int(num), int(den))
    if isinstance(obj, dict):
        return {k: from_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [from_jsonable(v) for v in obj]
    return obj


@dataclass
class OutputRecord:
    kind: Kind
    payload: Any

    def __post_init__(self):
        self.kind = Kind(self.kind)

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps({"kind": self.kind.value, "payload": to_jsonable(self.payload)}, indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        raw = json.loads(text)
        return cls(Kind(raw["kind"]), from_jsonable(raw["payload"]))


def dumps(obj: Any, indent: int | None = 2) -> str:
    return json.dumps(to_jsonable(obj), indent=indent)


def loads(text: str) -> Any:
    return from_jsonable(json.loads(text))
