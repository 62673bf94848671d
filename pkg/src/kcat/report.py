"""Validation reports: named checks with a status and an optional witness."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS, FAIL, UNKNOWN = "pass", "fail", "unknown"


def jsonable(x):
    """Render labels, tuples and scalars into JSON-friendly values."""
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if isinstance(x, dict):
        return {str(jsonable_key(k)): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return str(x)


def jsonable_key(k):
    if isinstance(k, tuple):
        return "(" + ",".join(str(jsonable_key(a)) for a in k) + ")"
    return k


@dataclass
class Check:
    name: str
    status: str
    witness: object = None
    detail: str = ""
    seconds: float | None = None

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self, timing: bool = False) -> dict:
        d = {"check": self.name, "status": self.status, "witness": jsonable(self.witness)}
        if self.detail:
            d["detail"] = self.detail
        if timing and self.seconds is not None:
            d["seconds"] = round(self.seconds, 6)
        return d


@dataclass
class Report:
    title: str = ""
    checks: list[Check] = field(default_factory=list)

    def add(self, name, ok, witness=None, detail="") -> Check:
        if ok is None:
            status = UNKNOWN
        else:
            status = PASS if ok else FAIL
        c = Check(name, status, witness if status != PASS else None, detail)
        self.checks.append(c)
        return c

    def extend(self, other: Report, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.witness, c.detail, c.seconds))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def first_failure(self) -> Check | None:
        fails = self.failures
        return fails[0] if fails else None

    def status_of(self, name: str) -> str:
        for c in self.checks:
            if c.name == name:
                return c.status
        raise KeyError(name)

    def raise_if_failed(self, exc_type, message: str | None = None):
        bad = self.first_failure()
        if bad is not None:
            msg = message or f"{self.title}: {bad.name} failed"
            if bad.witness is not None:
                msg += f" (witness {jsonable(bad.witness)})"
            raise exc_type(msg, report=self, witness=bad.witness)
        return self

    def to_dict(self, timing: bool = False) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [c.to_dict(timing) for c in self.checks],
        }

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=False)

    def to_text(self, verbose: bool = False) -> str:
        lines = [f"== {self.title}" if self.title else "=="]
        for c in self.checks:
            if c.status == PASS and not verbose:
                continue
            line = f"  [{c.status.upper():7s}] {c.name}"
            if c.witness is not None:
                line += f"  witness={jsonable(c.witness)}"
            if c.detail:
                line += f"  ({c.detail})"
            lines.append(line)
        n_pass = sum(c.status == PASS for c in self.checks)
        n_fail = sum(c.status == FAIL for c in self.checks)
        n_unk = sum(c.status == UNKNOWN for c in self.checks)
        lines.append(f"  {n_pass} passed, {n_fail} failed, {n_unk} unknown")
        return "\n".join(lines)

    def __str__(self):
        return self.to_text()
