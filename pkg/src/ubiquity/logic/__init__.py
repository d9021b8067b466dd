"""Syntax and pseudo-topological semantics of the logic of the plausible."""

from .parser import parse, tokenize
from .semantics import PTStructure, enumerate_structures, estimate_structures, satisfaction_set, satisfies
from .syntax import (
    And,
    Eq,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Pred,
    Ubiq,
    depth,
    free_vars,
    signature,
    to_text,
)
from .validity import AXIOMS, CONTROLS, THEOREMS, Verdict, axiom_suite, check_validity

__all__ = [
    "And", "Eq", "Exists", "Forall", "Formula", "Iff", "Implies", "Not", "Or", "Pred", "Ubiq",
    "AXIOMS", "CONTROLS", "THEOREMS", "PTStructure", "Verdict",
    "axiom_suite", "check_validity", "depth", "enumerate_structures", "estimate_structures",
    "free_vars", "parse", "satisfaction_set", "satisfies", "signature", "to_text", "tokenize",
]
