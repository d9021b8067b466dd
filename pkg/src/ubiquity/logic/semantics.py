"""Pseudo-topological structures and the satisfaction relation of L(U)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Any, Iterable, Iterator, Mapping

from ..errors import PreconditionError, ValidationError
from ..guards import guard, relaxed
from ..pseudotop import MAX_CARRIER, PseudoTopology, count_spaces, enumerate_spaces, validate_space
from .syntax import And, Eq, Exists, Forall, Formula, Iff, Implies, Not, Or, Pred, Ubiq, free_vars

STRUCTURE_LIMIT = 10**7
DOMAIN_LABELS = "abcdefgh"


@dataclass(frozen=True)
class PTStructure:
    """A first-order structure plus a pseudo-topology on its domain."""

    domain: tuple[str, ...]
    predicates: Mapping[str, frozenset[tuple[str, ...]]]
    space: PseudoTopology

    def __post_init__(self):
        if tuple(self.space.carrier) != tuple(self.domain):
            raise ValidationError("the pseudo-topology must live on the structure's domain")
        dom = set(self.domain)
        for name, rel in self.predicates.items():
            for t in rel:
                if not set(t) <= dom:
                    raise ValidationError(f"tuple {list(t)} of {name} leaves the domain", witness=list(t))

    def __hash__(self):
        return hash((self.domain, tuple(sorted(self.predicates.items())), self.space))

    def is_open(self, subset: Iterable[str]) -> bool:
        return self.space.mask(subset) in self.space.opens

    def to_json(self) -> dict[str, Any]:
        index = {l: i for i, l in enumerate(self.domain)}
        preds = {
            name: [list(t) for t in sorted(rel, key=lambda t: [index[x] for x in t])]
            for name, rel in sorted(self.predicates.items())
        }
        return {"domain": list(self.domain), "opens": self.space.open_sets(), "predicates": preds}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> PTStructure:
        for key in ("domain", "opens"):
            if key not in data:
                raise ValidationError(f"structure file lacks {key!r}")
        domain = tuple(data["domain"])
        space = validate_space(domain, data["opens"])
        preds = {}
        for name, rows in data.get("predicates", {}).items():
            rows = [tuple(r) for r in rows]
            if len({len(r) for r in rows}) > 1:
                raise ValidationError(f"predicate {name} has tuples of different lengths")
            preds[name] = frozenset(rows)
        return cls(domain, preds, space)

    @classmethod
    def load(cls, path) -> PTStructure:
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


def satisfies(K: PTStructure, phi: Formula, sigma: Mapping[str, str] | None = None) -> bool:
    """K ⊨ φ[σ] with the classical clauses and, for U x φ, {b : K ⊨ φ[σ(x↦b)]} ∈ Ω."""
    sigma = dict(sigma or {})
    missing = sorted(free_vars(phi) - sigma.keys())
    if missing:
        raise PreconditionError(f"assignment does not cover free variable(s) {', '.join(missing)}")
    for v, b in sigma.items():
        if b not in K.space._index:
            raise PreconditionError(f"variable {v} is assigned {b!r}, which is not in the domain")
    return _eval(K, phi, sigma)


def _eval(K: PTStructure, phi: Formula, s: dict[str, str]) -> bool:
    if isinstance(phi, Pred):
        rel = K.predicates.get(phi.name, frozenset())
        return tuple(s[a] for a in phi.args) in rel
    if isinstance(phi, Eq):
        return s[phi.left] == s[phi.right]
    if isinstance(phi, Not):
        return not _eval(K, phi.body, s)
    if isinstance(phi, And):
        return _eval(K, phi.left, s) and _eval(K, phi.right, s)
    if isinstance(phi, Or):
        return _eval(K, phi.left, s) or _eval(K, phi.right, s)
    if isinstance(phi, Implies):
        return not _eval(K, phi.left, s) or _eval(K, phi.right, s)
    if isinstance(phi, Iff):
        return _eval(K, phi.left, s) == _eval(K, phi.right, s)
    if isinstance(phi, (Forall, Exists, Ubiq)):
        saved = s.get(phi.var)
        had = phi.var in s
        hits = []
        for b in K.domain:
            s[phi.var] = b
            hits.append(_eval(K, phi.body, s))
        if had:
            s[phi.var] = saved
        else:
            del s[phi.var]
        if isinstance(phi, Forall):
            return all(hits)
        if isinstance(phi, Exists):
            return any(hits)
        mask = sum(1 << i for i, h in enumerate(hits) if h)
        return mask in K.space.opens
    raise TypeError(f"not a formula: {phi!r}")


def satisfaction_set(K: PTStructure, phi: Formula, var: str, sigma: Mapping[str, str] | None = None) -> frozenset[str]:
    """{b ∈ domain : K ⊨ φ[σ(var↦b)]}."""
    sigma = dict(sigma or {})
    return frozenset(b for b in K.domain if satisfies(K, phi, {**sigma, var: b}))


# ---------------------------------------------------------------- enumeration


def domain_labels(n: int) -> tuple[str, ...]:
    return tuple(DOMAIN_LABELS[:n]) if n <= len(DOMAIN_LABELS) else tuple(f"d{i}" for i in range(n))


def estimate_structures(signature: Mapping[str, int], max_domain: int) -> int:
    total = 0
    for n in range(1, max_domain + 1):
        cells = sum(n**k for k in signature.values())
        total += (1 << cells) * count_spaces(n)
    return total


def check_bounds(signature: Mapping[str, int], max_domain: int, unsafe: bool = False) -> int:
    if max_domain < 1:
        raise PreconditionError("max_domain must be at least 1")
    if unsafe:
        with relaxed():
            return check_bounds(signature, max_domain)
    guard(max_domain, MAX_CARRIER, f"structures are enumerated for domains of size at most {MAX_CARRIER}")
    estimate = estimate_structures(signature, max_domain)
    guard(estimate, STRUCTURE_LIMIT, f"{estimate} structures exceed the guard of {STRUCTURE_LIMIT}; lower max_domain")
    return estimate


def enumerate_structures(signature: Mapping[str, int], max_domain: int, *, unsafe: bool = False) -> Iterator[PTStructure]:
    """Every structure with domain size 1..max_domain, in a fixed order.

    Domains are ``a, b, c, ...``.  For each size the predicate
    interpretations vary in the outer loop and the pseudo-topologies in the
    inner loop.  Predicates are taken in name order, the last one varying
    fastest; each predicate's extension is a binary counter over the tuples
    of the domain in lexicographic order, bit ``i`` standing for tuple ``i``.
    """
    check_bounds(signature, max_domain, unsafe)
    names = sorted(signature)
    for n in range(1, max_domain + 1):
        domain = domain_labels(n)
        if unsafe:
            with relaxed():
                spaces = enumerate_spaces(domain)
        else:
            spaces = enumerate_spaces(domain)
        tuples = {name: list(product(domain, repeat=signature[name])) for name in names}
        ranges = [range(1 << len(tuples[name])) for name in names]
        for counters in product(*ranges):
            preds = {
                name: frozenset(t for i, t in enumerate(tuples[name]) if c >> i & 1)
                for name, c in zip(names, counters)
            }
            for space in spaces:
                yield PTStructure(domain, preds, space)
