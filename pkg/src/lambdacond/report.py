"""Pass/fail records for verification runs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    statement: str
    passed: bool
    witness: Any = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "paper_ref": self.statement, "pass": bool(self.passed)}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, name: str, statement: str, passed: bool, witness: Any = None) -> Check:
        check = Check(name, statement, bool(passed), None if passed else witness)
        self.checks.append(check)
        return check

    def extend(self, other: Report):
        self.checks.extend(other.checks)
        self.notes.extend(other.notes)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def by_name(self, prefix: str) -> list[Check]:
        return [c for c in self.checks if c.name.startswith(prefix)]


def witness_of(x) -> Any:
    """JSON-friendly witness: decimal strings for anything holding coefficients."""
    coeffs = getattr(x, "coeffs", None)
    if coeffs is not None:
        return [str(c) for c in coeffs]
    if isinstance(x, (list, tuple)):
        return [witness_of(v) for v in x]
    if isinstance(x, int):
        return str(x)
    return x
