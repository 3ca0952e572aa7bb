"""Residual reports shared by every checker."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    passed: bool
    relation: int | None = None
    support: int | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        out = {"relation": self.relation, "name": self.name,
               "residual": float(self.residual), "pass": bool(self.passed)}
        if self.support is not None:
            out["support"] = int(self.support)
        if self.detail:
            out["detail"] = self.detail
        return out


def result(name: str, residual: float, tol: float, **kw) -> CheckResult:
    residual = float(residual)
    return CheckResult(name, residual, residual <= tol, **kw)


@dataclass
class Report:
    title: str
    tolerance: float
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def max_residual(self) -> float:
        return max((r.residual for r in self.results), default=0.0)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def add(self, name: str, residual: float, **kw) -> CheckResult:
        r = result(name, residual, self.tolerance, **kw)
        self.results.append(r)
        return r

    def append(self, r: CheckResult) -> None:
        self.results.append(r)

    def extend(self, other: "Report", prefix: str | None = None) -> "Report":
        for r in other.results:
            name = f"{prefix}: {r.name}" if prefix else r.name
            self.results.append(CheckResult(name, r.residual, r.passed, r.relation, r.support, r.detail))
        return self

    def __getitem__(self, name: str) -> CheckResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def group(self, prefix: str) -> list[CheckResult]:
        return [r for r in self.results if r.name.startswith(prefix)]

    def to_dict(self) -> dict:
        return {"title": self.title, "tolerance": self.tolerance, "pass": self.passed,
                "max_residual": self.max_residual,
                "results": [r.to_dict() for r in self.results]}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def to_text(self) -> str:
        lines = [f"== {self.title} [{'PASS' if self.passed else 'FAIL'}] "
                 f"(tolerance {self.tolerance:g}, max residual {self.max_residual:.3e})"]
        for r in self.results:
            tag = "PASS" if r.passed else "FAIL"
            extra = f" support={r.support}" if r.support is not None else ""
            detail = f"  {r.detail}" if r.detail else ""
            lines.append(f"  {tag} {r.name}: residual={r.residual:.3e}{extra}{detail}")
        return "\n".join(lines)


def merge(title: str, tolerance: float, reports: Iterable[Report]) -> Report:
    out = Report(title, tolerance)
    for rep in reports:
        out.extend(rep, prefix=rep.title)
    return out
