"""Bounded validity checking and countermodel search for L(U) sentences.

A "valid" verdict only ever means valid over every pseudo-topological
structure up to the stated domain size.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..errors import PreconditionError
from ..report import LawReport, LawResult
from .parser import parse
from .semantics import PTStructure, enumerate_structures, satisfies
from .syntax import Formula, free_vars, signature, to_text


@dataclass(frozen=True)
class Verdict:
    valid: bool
    bound: int
    formula: Formula
    checked: int
    countermodel: PTStructure | None = None
    assignment: dict[str, str] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "valid" if self.valid else "invalid"

    def describe(self) -> str:
        if self.valid:
            return f"valid up to bound {self.bound}"
        return f"invalid: countermodel {self.countermodel.to_json()}"

    def to_json(self) -> dict[str, Any]:
        out = {
            "formula": to_text(self.formula),
            "status": self.status,
            "bound": self.bound,
            "structures_checked": self.checked,
        }
        if self.valid:
            out["message"] = f"valid up to bound {self.bound}"
        else:
            out["countermodel"] = self.countermodel.to_json()
            out["assignment"] = dict(self.assignment)
        return out


def check_validity(phi: Formula | str, max_domain: int, *, unsafe: bool = False) -> Verdict:
    """Search every structure up to ``max_domain`` for one falsifying ``phi``."""
    if isinstance(phi, str):
        phi = parse(phi)
    fv = free_vars(phi)
    if fv:
        raise PreconditionError(f"check_validity needs a sentence; free variable(s): {', '.join(sorted(fv))}")
    sig = signature(phi)
    checked = 0
    for K in enumerate_structures(sig, max_domain, unsafe=unsafe):
        checked += 1
        if not satisfies(K, phi, {}):
            return Verdict(False, max_domain, phi, checked, K, {})
    return Verdict(True, max_domain, phi, checked)


AXIOMS: dict[str, str] = {
    "Ax1": "U x P(x) & U x Q(x) -> U x (P(x) & Q(x))",
    "Ax2": "U x P(x) & U x Q(x) -> U x (P(x) | Q(x))",
    "Ax3": "forall x P(x) -> U x P(x)",
    "Ax4": "U x P(x) -> exists x P(x)",
    "Ax5": "forall x (P(x) <-> Q(x)) -> (U x P(x) <-> U x Q(x))",
    "Ax6": "U x P(x) -> U y P(y)",
}

THEOREMS: dict[str, str] = {
    "Thm(i)": "U x (P(x) | ~P(x))",
    "Thm(ii)": "U x P(x) & U x Q(x) -> exists x (P(x) & Q(x))",
    "Thm(iii)": "U x P(x) -> ~U x ~P(x)",
}

CONTROLS: dict[str, str] = {
    "converse of Ax3": "U x P(x) -> forall x P(x)",
    "U x P(x) -> U x Q(x)": "U x P(x) -> U x Q(x)",
}


def axiom_suite(max_domain: int = 3, *, signature_hint: dict[str, int] | None = None) -> LawReport:
    """Validity of the six axiom schemas and the three derived theorems.

    Schemas are instantiated with A := P(x), B := Q(x).  Every sentence is
    checked over the joint signature {P:1, Q:1} so each instance sees the
    same structures.
    """
    report = LawReport(f"axioms and theorems of L(U), domains up to {max_domain}")
    sig = signature_hint or {"P": 1, "Q": 1}
    structures = list(enumerate_structures(sig, max_domain))
    for name, text in {**AXIOMS, **THEOREMS}.items():
        phi = parse(text)
        bad = next((K for K in structures if not satisfies(K, phi, {})), None)
        report.add(
            LawResult(
                f"{name}: {text}",
                bad is None,
                len(structures),
                None if bad is None else {"countermodel": bad.to_json()},
                f"valid up to bound {max_domain}" if bad is None else "invalid",
            )
        )
    return report
