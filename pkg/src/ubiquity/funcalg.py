"""Functional propositional algebras B^X.

A :class:`PropFunction` is a total map from a finite domain ``X`` into a
finite Boolean algebra ``B``.  With pointwise operations the maps form a
Boolean algebra again.  Over a finite domain every map is finitely valued,
so the only sub-structure worth naming is the constants (``is_constant``).
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, Mapping

from .boolalg import Element, FiniteBooleanAlgebra
from .errors import DomainMismatchError, ValidationError
from .guards import guard
from .report import LawChecker, LawReport

SWEEP_LIMIT = 10**6


class PropFunction:
    __slots__ = ("domain", "codomain", "values")

    def __init__(self, domain: Iterable[str], codomain: FiniteBooleanAlgebra, values: Iterable[Element]):
        domain = tuple(domain)
        values = tuple(values)
        if not domain:
            raise ValidationError("the domain of a propositional function must be nonempty")
        if len(set(domain)) != len(domain):
            raise ValidationError(f"duplicate domain labels in {list(domain)}")
        if len(values) != len(domain):
            raise ValidationError("table must be total over the domain")
        for v in values:
            if not isinstance(v, Element) or v.algebra != codomain:
                raise ValidationError(f"value {v!r} does not belong to the codomain", witness=v)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "codomain", codomain)
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError("PropFunction is immutable")

    @classmethod
    def from_mapping(cls, domain: Iterable[str], codomain: FiniteBooleanAlgebra, table: Mapping[str, Element]):
        domain = tuple(domain)
        missing = [x for x in domain if x not in table]
        if missing:
            raise ValidationError(f"table is not total: no value for {missing}", witness=missing)
        extra = set(table) - set(domain)
        if extra:
            raise ValidationError(f"table mentions labels outside the domain: {sorted(extra)}")
        return cls(domain, codomain, (table[x] for x in domain))

    @classmethod
    def constant(cls, domain: Iterable[str], value: Element) -> PropFunction:
        domain = tuple(domain)
        return cls(domain, value.algebra, [value] * len(domain))

    def __call__(self, x: str) -> Element:
        try:
            return self.values[self.domain.index(x)]
        except ValueError:
            raise ValidationError(f"{x!r} is not in the domain") from None

    def __eq__(self, other):
        if not isinstance(other, PropFunction):
            return NotImplemented
        return (self.domain, self.codomain, self.values) == (other.domain, other.codomain, other.values)

    def __hash__(self):
        return hash((self.domain, self.codomain, self.values))

    def __repr__(self):
        body = ", ".join(f"{x}↦{v!r}" for x, v in zip(self.domain, self.values))
        return "{" + body + "}"

    def _peer(self, other: PropFunction) -> PropFunction:
        if self.domain != other.domain or self.codomain != other.codomain:
            raise DomainMismatchError("propositional functions have different domains or codomains")
        return other

    def __and__(self, other: PropFunction) -> PropFunction:
        other = self._peer(other)
        return PropFunction(self.domain, self.codomain, (a & b for a, b in zip(self.values, other.values)))

    def __or__(self, other: PropFunction) -> PropFunction:
        other = self._peer(other)
        return PropFunction(self.domain, self.codomain, (a | b for a, b in zip(self.values, other.values)))

    def __invert__(self) -> PropFunction:
        return PropFunction(self.domain, self.codomain, (~a for a in self.values))

    def __le__(self, other: PropFunction) -> bool:
        other = self._peer(other)
        return all(a <= b for a, b in zip(self.values, other.values))

    def is_constant(self) -> bool:
        return all(v == self.values[0] for v in self.values)

    def to_json(self) -> dict[str, list[str]]:
        return {x: self.codomain.serialize(v) for x, v in zip(self.domain, self.values)}

    @classmethod
    def from_json(cls, codomain: FiniteBooleanAlgebra, data: Mapping[str, Iterable[str]]) -> PropFunction:
        return cls(data.keys(), codomain, (codomain.element(v) for v in data.values()))


def pointwise(op_kind: str, p: PropFunction, q: PropFunction | None = None) -> PropFunction:
    if op_kind == "complement":
        if q is not None:
            raise ValidationError("complement takes a single operand")
        return ~p
    if q is None:
        raise ValidationError(f"{op_kind} needs two operands")
    if op_kind == "meet":
        return p & q
    if op_kind == "join":
        return p | q
    raise ValidationError(f"unknown pointwise operation {op_kind!r}")


def value_range(p: PropFunction) -> frozenset[Element]:
    """R(p): the distinct values attained by ``p``."""
    return frozenset(p.values)


def _join_all(algebra: FiniteBooleanAlgebra, values: Iterable[Element]) -> Element:
    mask = 0
    for v in values:
        mask |= v.mask
    return algebra.from_mask(mask)


def _meet_all(algebra: FiniteBooleanAlgebra, values: Iterable[Element]) -> Element:
    mask = algebra.top_mask
    for v in values:
        mask &= v.mask
    return algebra.from_mask(mask)


def q_operator(p: PropFunction) -> PropFunction:
    """Qp: the constant function whose value is the join of R(p)."""
    return PropFunction.constant(p.domain, _join_all(p.codomain, value_range(p)))


def functional_quantifier(kind: str, p: PropFunction) -> PropFunction:
    if kind == "exists":
        return q_operator(p)
    if kind == "forall":
        return PropFunction.constant(p.domain, _meet_all(p.codomain, value_range(p)))
    raise ValidationError(f"unknown quantifier kind {kind!r}")


def zero_function(domain: Iterable[str], codomain: FiniteBooleanAlgebra) -> PropFunction:
    return PropFunction.constant(domain, codomain.zero)


def one_function(domain: Iterable[str], codomain: FiniteBooleanAlgebra) -> PropFunction:
    return PropFunction.constant(domain, codomain.one)


def all_functions(codomain: FiniteBooleanAlgebra, domain: Iterable[str]) -> Iterator[PropFunction]:
    """Every map X → B; the last domain point varies fastest."""
    domain = tuple(domain)
    elems = list(codomain.elements())
    for values in product(elems, repeat=len(domain)):
        yield PropFunction(domain, codomain, values)


def sweep_size(codomain: FiniteBooleanAlgebra, domain: Iterable[str]) -> int:
    return codomain.size ** len(tuple(domain))


def check_boolean_laws(codomain: FiniteBooleanAlgebra, domain: Iterable[str]) -> LawReport:
    """B^X with pointwise operations is a Boolean algebra; order is pointwise."""
    domain = tuple(domain)
    _guard(codomain, domain, pairs=True)
    funcs = list(all_functions(codomain, domain))
    zero, one = zero_function(domain, codomain), one_function(domain, codomain)
    names = ("commutative", "absorption", "complementation", "distributive", "associative", "order is pointwise")
    laws = {n: LawChecker(n) for n in names}
    for p in funcs:
        laws["complementation"].check((p & ~p) == zero and (p | ~p) == one, lambda: {"p": p.to_json()})
    for p, q in product(funcs, repeat=2):
        w = lambda: {"p": p.to_json(), "q": q.to_json()}
        laws["commutative"].check(p & q == q & p and p | q == q | p, w)
        laws["absorption"].check(p & (p | q) == p and p | (p & q) == p, w)
        laws["order is pointwise"].check(((p & q) == p) == all(a <= b for a, b in zip(p.values, q.values)), w)
    guard(len(funcs) ** 3, 10 * SWEEP_LIMIT, f"triple sweep needs {len(funcs) ** 3} checks")
    for p, q, r in product(funcs, repeat=3):
        w = lambda: {"p": p.to_json(), "q": q.to_json(), "r": r.to_json()}
        laws["distributive"].check(p & (q | r) == (p & q) | (p & r), w)
        laws["associative"].check((p & q) & r == p & (q & r), w)
    report = LawReport(f"Boolean laws of B^X, |B|={codomain.size}, |X|={len(domain)}")
    report.extend(c.result() for c in laws.values())
    return report


def _guard(codomain, domain, pairs=False):
    n = sweep_size(codomain, domain)
    guard(n, SWEEP_LIMIT, f"sweep over B^X has {n} functions, above the limit {SWEEP_LIMIT}")
    if pairs:
        guard(n * n, 10 * SWEEP_LIMIT, f"pair sweep needs {n * n} checks")
    return n


def check_q_properties(codomain: FiniteBooleanAlgebra, domain: Iterable[str]) -> LawReport:
    """Sweep P1–P8 for Q over all of B^X.

    P6 and P8 are reported twice: unrestricted, and with the argument that
    must be constant for the law to make sense restricted to constants.
    Each failing law carries the first counterexample in sweep order.
    """
    domain = tuple(domain)
    _guard(codomain, domain, pairs=True)
    funcs = list(all_functions(codomain, domain))
    qs = {p: q_operator(p) for p in funcs}
    Q = qs.__getitem__
    zero = zero_function(domain, codomain)

    p1 = LawChecker("P1 Q0 = 0")
    p2 = LawChecker("P2 p <= Qp")
    p3 = LawChecker("P3 Q(p | q) = Qp | Qq")
    p4 = LawChecker("P4 Q(Qp) = Qp")
    p5 = LawChecker("P5 Q((Qp)') = (Qp)'")
    p6 = LawChecker("P6 Q(p') = (Qp)'", note="unrestricted reading")
    p6c = LawChecker("P6 restricted Q(p') = (Qp)' for constant p")
    p7 = LawChecker("P7 Q(p & Qq) = Qp & Qq")
    p8 = LawChecker("P8 Q(p & q) = Qp & q", note="unrestricted reading")
    p8c = LawChecker("P8 restricted Q(p & q) = Qp & q for constant q")

    p1.check(Q(zero) == zero, lambda: {"Q0": Q(zero).to_json()})
    for p in funcs:
        w = lambda: {"p": p.to_json()}
        p2.check(p <= Q(p), w)
        p4.check(Q(Q(p)) == Q(p), w)
        p5.check(q_operator(~Q(p)) == ~Q(p), w)
        lhs, rhs = q_operator(~p), ~Q(p)
        wp6 = lambda: {"p": p.to_json(), "Q(p')": lhs.to_json(), "(Qp)'": rhs.to_json()}
        p6.check(lhs == rhs, wp6)
        if p.is_constant():
            p6c.check(lhs == rhs, wp6)
    for p, q in product(funcs, repeat=2):
        w = lambda: {"p": p.to_json(), "q": q.to_json()}
        p3.check(Q(p | q) == Q(p) | Q(q), w)
        p7.check(q_operator(p & Q(q)) == Q(p) & Q(q), w)
        lhs, rhs = q_operator(p & q), Q(p) & q
        wp8 = lambda: {"p": p.to_json(), "q": q.to_json(), "Q(p & q)": lhs.to_json(), "Qp & q": rhs.to_json()}
        p8.check(lhs == rhs, wp8)
        if q.is_constant():
            p8c.check(lhs == rhs, wp8)

    report = LawReport(f"Q properties on B^X, |B|={codomain.size}, |X|={len(domain)}")
    report.extend(c.result() for c in (p1, p2, p3, p4, p5, p6, p6c, p7, p8, p8c))
    return report
