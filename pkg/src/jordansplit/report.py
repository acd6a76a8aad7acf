from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    """One verdict.  ``witness`` maps names to elements, basis labels or numbers."""

    name: str
    passed: bool
    witness: dict[str, Any] = field(default_factory=dict)
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "passed": self.passed,
            "witness": {k: _fmt(v) for k, v in self.witness.items()},
            "detail": self.detail,
        }


def _fmt(v):
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_fmt(x) for x in v]
    return str(v)


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "", **witness) -> Check:
        c = Check(name, bool(passed), dict(witness), detail)
        self.checks.append(c)
        return c

    def extend(self, other: Report, prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness, c.detail))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"title": self.title, "ok": self.ok, "checks": [c.to_dict() for c in self.checks]}

    def text(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            line = f"  [{mark}] {c.name}"
            if c.detail:
                line += f" ({c.detail})"
            lines.append(line)
            for k, v in c.witness.items():
                lines.append(f"         {k} = {_fmt(v)}")
        return "\n".join(lines)
