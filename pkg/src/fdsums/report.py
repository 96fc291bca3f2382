"""Outcome records for identity checks run over parameter grids."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable


@dataclass
class Witness:
    params: dict[str, Any]
    lhs: Any
    rhs: Any
    detail: str = ""


@dataclass
class VerificationReport:
    """Result of checking one statement over a grid.

    ``passed`` is derived: the report passes exactly when no failure was
    recorded. ``by_part`` counts checks whose params carry a ``"part"`` tag. ``observations`` holds informational records that are not
    failures (e.g. the identity happening to hold outside its proven range).
    """

    theorem_id: str
    grid: str
    checked: int = 0
    failures: list[Witness] = field(default_factory=list)
    observations: list[Witness] = field(default_factory=list)
    by_part: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, params: dict[str, Any], lhs: Any, rhs: Any, detail: str = "") -> bool:
        self.checked += 1
        if "part" in params:
            part = str(params["part"])
            self.by_part[part] = self.by_part.get(part, 0) + 1
        if not ok:
            self.failures.append(Witness(dict(params), lhs, rhs, detail))
        return ok

    def observe(self, params: dict[str, Any], lhs: Any, rhs: Any, detail: str = "") -> None:
        self.observations.append(Witness(dict(params), lhs, rhs, detail))

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.checked += other.checked
        self.failures.extend(other.failures)
        self.observations.extend(other.observations)
        for part, n in other.by_part.items():
            self.by_part[part] = self.by_part.get(part, 0) + n
        return self

    @classmethod
    def combine(cls, theorem_id: str, grid: str, reports: Iterable["VerificationReport"]) -> "VerificationReport":
        out = cls(theorem_id, grid)
        for r in reports:
            out.merge(r)
        return out

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.theorem_id} on {self.grid}: {self.checked} checks, {len(self.failures)} failures"
