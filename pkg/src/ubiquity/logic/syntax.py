"""Abstract syntax of L(U): first-order logic with identity plus the
ubiquity quantifier ``U``.  Terms are variables only."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union


@dataclass(frozen=True)
class Pred:
    name: str
    args: tuple[str, ...] = ()


@dataclass(frozen=True)
class Eq:
    left: str
    right: str


@dataclass(frozen=True)
class Not:
    body: Formula


@dataclass(frozen=True)
class And:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Forall:
    var: str
    body: Formula


@dataclass(frozen=True)
class Exists:
    var: str
    body: Formula


@dataclass(frozen=True)
class Ubiq:
    """U x φ: the set of x satisfying φ is open."""

    var: str
    body: Formula


Formula = Union[Pred, Eq, Not, And, Or, Implies, Iff, Forall, Exists, Ubiq]
Binary = (And, Or, Implies, Iff)
Binder = (Forall, Exists, Ubiq)


def free_vars(phi: Formula) -> frozenset[str]:
    if isinstance(phi, Pred):
        return frozenset(phi.args)
    if isinstance(phi, Eq):
        return frozenset((phi.left, phi.right))
    if isinstance(phi, Not):
        return free_vars(phi.body)
    if isinstance(phi, Binary):
        return free_vars(phi.left) | free_vars(phi.right)
    if isinstance(phi, Binder):
        return free_vars(phi.body) - {phi.var}
    raise TypeError(f"not a formula: {phi!r}")


def subformulas(phi: Formula) -> Iterator[Formula]:
    yield phi
    if isinstance(phi, (Not, *Binder)):
        yield from subformulas(phi.body)
    elif isinstance(phi, Binary):
        yield from subformulas(phi.left)
        yield from subformulas(phi.right)


def signature(phi: Formula) -> dict[str, int]:
    """Predicate name → arity; raises ArityError on conflicting uses."""
    from ..errors import ArityError

    sig: dict[str, int] = {}
    for sub in subformulas(phi):
        if isinstance(sub, Pred):
            k = len(sub.args)
            if sig.setdefault(sub.name, k) != k:
                raise ArityError(f"predicate {sub.name} used with arities {sig[sub.name]} and {k}")
    return dict(sorted(sig.items()))


def depth(phi: Formula) -> int:
    if isinstance(phi, (Pred, Eq)):
        return 0
    if isinstance(phi, (Not, *Binder)):
        return 1 + depth(phi.body)
    return 1 + max(depth(phi.left), depth(phi.right))


# ---------------------------------------------------------------- printing

# binding strength; higher binds tighter
_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4}
_SYMBOL = {Iff: "<->", Implies: "->", Or: "|", And: "&"}
_BINDER = {Forall: "forall", Exists: "exists", Ubiq: "U"}
_UNARY = 5


def _prec(phi: Formula) -> int:
    return _PREC.get(type(phi), _UNARY)


def to_text(phi: Formula) -> str:
    """Print with the fewest parentheses that parse back to the same tree.

    ``&``, ``|`` and ``<->`` associate to the left, ``->`` to the right.
    """
    if isinstance(phi, Pred):
        return phi.name if not phi.args else f"{phi.name}({','.join(phi.args)})"
    if isinstance(phi, Eq):
        return f"{phi.left} = {phi.right}"
    if isinstance(phi, Not):
        return "~" + _wrap(phi.body, _UNARY)
    if isinstance(phi, Binder):
        return f"{_BINDER[type(phi)]} {phi.var} {_wrap(phi.body, _UNARY)}"
    p = _PREC[type(phi)]
    right_assoc = isinstance(phi, Implies)
    left = _wrap(phi.left, p + 1 if right_assoc else p)
    right = _wrap(phi.right, p if right_assoc else p + 1)
    return f"{left} {_SYMBOL[type(phi)]} {right}"


def _wrap(phi: Formula, needed: int) -> str:
    text = to_text(phi)
    return f"({text})" if _prec(phi) < needed else text

