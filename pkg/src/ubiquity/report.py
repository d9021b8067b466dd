"""Law-check results and reports with deterministic JSON serialization."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable


@dataclass(frozen=True)
class LawResult:
    """Outcome of checking one law over an exhaustive sweep.

    ``counterexample`` is a JSON-ready mapping describing the first failing
    instance in sweep order, or ``None`` when the law held everywhere.
    """

    name: str
    passed: bool
    checked: int = 0
    counterexample: dict[str, Any] | None = None
    note: str | None = None

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"law": self.name, "passed": self.passed, "checked": self.checked}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class LawReport:
    title: str
    results: list[LawResult] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)

    def add(self, result: LawResult) -> LawResult:
        self.results.append(result)
        return result

    def extend(self, results: Iterable[LawResult]) -> None:
        self.results.extend(results)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> LawResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(r.name == name for r in self.results)

    def failures(self) -> list[LawResult]:
        return [r for r in self.results if not r.passed]

    def to_json(self) -> dict[str, Any]:
        return {
            "title": self.title,
            "passed": self.passed,
            "results": [r.to_json() for r in self.results],
            **({"info": self.info} if self.info else {}),
        }

    def format(self) -> str:
        lines = [self.title]
        for r in self.results:
            mark = "PASS" if r.passed else "FAIL"
            line = f"  [{mark}] {r.name} ({r.checked} checked)"
            if r.counterexample is not None:
                line += f" counterexample: {r.counterexample}"
            if r.note:
                line += f" -- {r.note}"
            lines.append(line)
        return "\n".join(lines)


class LawChecker:
    """Accumulates instances of a single law and keeps the first failure."""

    def __init__(self, name: str, note: str | None = None):
        self.name = name
        self.note = note
        self.checked = 0
        self.counterexample: dict[str, Any] | None = None

    def check(self, ok: bool, witness) -> bool:
        """Record one instance; ``witness`` may be a callable producing the
        counterexample lazily."""
        self.checked += 1
        if not ok and self.counterexample is None:
            self.counterexample = witness() if callable(witness) else witness
        return ok

    def result(self) -> LawResult:
        return LawResult(
            self.name, self.counterexample is None, self.checked, self.counterexample, self.note
        )
