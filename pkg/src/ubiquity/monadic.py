"""Quantifiers on finite Boolean algebras and monadic algebras.

A quantifier is stored as a table indexed by element mask.  Everything in
this module is exhaustive: algebras are at most 16 elements, so ideals,
subalgebras and maximality are decided by looking at all candidates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Any, Callable, Iterable, Iterator, Mapping, NamedTuple, Sequence

from .boolalg import Element, FiniteBooleanAlgebra
from .errors import PreconditionError, ValidationError
from .guards import guard
from .report import LawChecker, LawReport

MAX_ELEMENTS = 16


class Check(NamedTuple):
    """Truth value plus the first violated law and its witness."""

    ok: bool
    law: str | None = None
    witness: dict[str, Any] | None = None

    def __bool__(self):
        return self.ok


def _guard(algebra: FiniteBooleanAlgebra, limit: int | None = None, what: str = "sweep"):
    limit = MAX_ELEMENTS if limit is None else limit
    guard(algebra.size, limit, f"{what} is limited to algebras with at most {limit} elements, got {algebra.size}")


def coerce_table(algebra: FiniteBooleanAlgebra, table) -> tuple[int, ...]:
    """Normalize a table (mapping of Elements, or mask-indexed sequence) to masks."""
    n = algebra.size
    if isinstance(table, Mapping):
        out = [None] * n
        for k, v in table.items():
            k, v = _as_mask(algebra, k), _as_mask(algebra, v)
            out[k] = v
        missing = [algebra.serialize(m) for m, v in enumerate(out) if v is None]
        if missing:
            raise ValidationError(f"table is partial: no value for {missing}", witness=missing)
        return tuple(out)
    seq = list(table)
    if len(seq) != n:
        raise ValidationError(f"table has {len(seq)} entries, algebra has {n} elements")
    return tuple(_as_mask(algebra, v) for v in seq)


def _as_mask(algebra: FiniteBooleanAlgebra, v) -> int:
    if isinstance(v, Element):
        if v.algebra != algebra:
            raise ValidationError(f"{v!r} does not belong to {algebra!r}")
        return v.mask
    if isinstance(v, int) and 0 <= v <= algebra.top_mask:
        return v
    raise ValidationError(f"{v!r} is not an element of {algebra!r}")


def _subset(p: int, q: int) -> bool:
    return p & ~q == 0


# ---------------------------------------------------------------- quantifiers


def quantifier_violation(algebra: FiniteBooleanAlgebra, table: Sequence[int]) -> Check:
    top = algebra.top_mask
    ser = algebra.serialize
    if table[0] != 0:
        return Check(False, "E1 normalized", {"p": [], "table(p)": ser(table[0])})
    for p in range(top + 1):
        if not _subset(p, table[p]):
            return Check(False, "E2 increasing", {"p": ser(p), "table(p)": ser(table[p])})
    for p, q in product(range(top + 1), repeat=2):
        if table[p & table[q]] != table[p] & table[q]:
            return Check(False, "E3 quasi-multiplicative", {"p": ser(p), "q": ser(q)})
    return Check(True)


def is_quantifier(algebra: FiniteBooleanAlgebra, table) -> Check:
    """Decide E1 (∃0 = 0), E2 (p ≤ ∃p) and E3 (∃(p ∧ ∃q) = ∃p ∧ ∃q)."""
    return quantifier_violation(algebra, coerce_table(algebra, table))


class Quantifier:
    __slots__ = ("algebra", "table")

    def __init__(self, algebra: FiniteBooleanAlgebra, table, *, check: bool = True):
        table = coerce_table(algebra, table)
        if check:
            v = quantifier_violation(algebra, table)
            if not v:
                raise ValidationError(f"not a quantifier: {v.law} fails at {v.witness}", v.law, v.witness)
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "table", table)

    def __setattr__(self, name, value):
        raise AttributeError("Quantifier is immutable")

    def __call__(self, p: Element) -> Element:
        return Element(self.algebra, self.table[_as_mask(self.algebra, p)])

    def __eq__(self, other):
        if not isinstance(other, Quantifier):
            return NotImplemented
        return self.algebra == other.algebra and self.table == other.table

    def __hash__(self):
        return hash((self.algebra, self.table))

    def __repr__(self):
        body = ", ".join(f"{Element(self.algebra, p)!r}↦{Element(self.algebra, v)!r}" for p, v in enumerate(self.table))
        return f"Quantifier({body})"

    def universal(self, p: int) -> int:
        """∀p = (∃p′)′ on masks."""
        top = self.algebra.top_mask
        return top ^ self.table[top ^ p]

    def image(self) -> frozenset[int]:
        return frozenset(self.table)

    def is_simple(self) -> bool:
        top = self.algebra.top_mask
        return self.table[0] == 0 and all(v == top for v in self.table[1:])

    def is_identity(self) -> bool:
        return all(p == v for p, v in enumerate(self.table))

    def to_json(self) -> dict[str, Any]:
        ser = self.algebra.serialize
        return {
            "atoms": list(self.algebra.labels),
            "exists": [[ser(p), ser(v)] for p, v in enumerate(self.table)],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> Quantifier:
        algebra = FiniteBooleanAlgebra(data["atoms"])
        table = {algebra.element(p): algebra.element(v) for p, v in data["exists"]}
        return cls(algebra, table)


def identity_quantifier(algebra: FiniteBooleanAlgebra) -> Quantifier:
    return Quantifier(algebra, range(algebra.size))


def simple_quantifier(algebra: FiniteBooleanAlgebra) -> Quantifier:
    """∃0 = 0 and ∃p = 1 for every p ≠ 0."""
    top = algebra.top_mask
    return Quantifier(algebra, [0] + [top] * top)


def enumerate_quantifiers(algebra: FiniteBooleanAlgebra) -> list[Quantifier]:
    """Every table satisfying E1–E3, found by backtracking on the laws alone.

    Entries are assigned from the largest mask down; since ``p ≤ ∃p`` forces
    ``∃p`` to a numerically larger mask, most E3 instances become decidable
    early.  Results come out in lexicographic order of the table read from
    mask ``top`` down to mask 0.
    """
    _guard(algebra, what="quantifier enumeration")
    n = algebra.size
    top = n - 1
    table: list[int | None] = [None] * n
    table[0] = 0
    found: list[tuple[int, ...]] = []

    def consistent(m: int) -> bool:
        # every E3 instance whose three entries are now known, touching m
        for p in range(n):
            tp = table[p]
            if tp is None:
                continue
            for q in range(n):
                tq = table[q]
                if tq is None or (p != m and q != m and p & tq != m):
                    continue
                t = table[p & tq]
                if t is not None and t != tp & tq:
                    return False
        return True

    order = list(range(top, 0, -1))

    def extend(i: int):
        if i == len(order):
            found.append(tuple(table))
            return
        m = order[i]
        free = top ^ m
        # candidate values: supersets of m, enumerated as subsets of the free bits
        sub = free
        cands = []
        while True:
            cands.append(m | sub)
            if sub == 0:
                break
            sub = (sub - 1) & free
        for v in sorted(cands):
            table[m] = v
            if consistent(m):
                extend(i + 1)
        table[m] = None

    extend(0)
    found.sort(key=lambda t: t[::-1])
    return [Quantifier(algebra, t, check=False) for t in found]


# ---------------------------------------------------------------- subalgebras


def is_subalgebra(algebra: FiniteBooleanAlgebra, elements: Iterable) -> Check:
    members = frozenset(_as_mask(algebra, e) for e in elements)
    top = algebra.top_mask
    ser = algebra.serialize
    if 0 not in members or top not in members:
        return Check(False, "contains 0 and 1")
    for p in members:
        if top ^ p not in members:
            return Check(False, "closed under complement", {"p": ser(p)})
        for q in members:
            if p & q not in members:
                return Check(False, "closed under meet", {"p": ser(p), "q": ser(q)})
            if p | q not in members:
                return Check(False, "closed under join", {"p": ser(p), "q": ser(q)})
    return Check(True)


def least_upper_in(members: Iterable[int], p: int) -> int | None:
    """The least element of B(p) = {q ∈ members : p ≤ q}, or None."""
    ups = [q for q in members if _subset(p, q)]
    if not ups:
        return None
    meet = ups[0]
    for q in ups[1:]:
        meet &= q
    return meet if meet in ups else None


def enumerate_subalgebras(algebra: FiniteBooleanAlgebra) -> list[frozenset[int]]:
    """All Boolean subalgebras, by testing every subset containing 0 and 1."""
    _guard(algebra, what="subalgebra enumeration")
    top = algebra.top_mask
    middle = list(range(1, top))
    out = []
    for bits in range(1 << len(middle)):
        members = frozenset([0, top] + [m for i, m in enumerate(middle) if bits >> i & 1])
        if is_subalgebra(algebra, members):
            out.append(members)
    return out


def quantifier_from_subalgebra(algebra: FiniteBooleanAlgebra, elements: Iterable) -> Quantifier:
    """The unique quantifier with image ``elements``: ∃p is the least q ≥ p in it."""
    members = frozenset(_as_mask(algebra, e) for e in elements)
    sub = is_subalgebra(algebra, members)
    if not sub:
        raise PreconditionError(f"not a Boolean subalgebra ({sub.law}, witness {sub.witness})")
    table = []
    for p in range(algebra.size):
        least = least_upper_in(members, p)
        if least is None:
            raise PreconditionError(
                f"subalgebra is not relatively complete: B({algebra.serialize(p)}) has no least element"
            )
        table.append(least)
    return Quantifier(algebra, table)


# ---------------------------------------------------------------- monadic algebras


class MonadicAlgebra:
    """A finite Boolean algebra with a quantifier ∃; ∀ is derived by duality."""

    __slots__ = ("algebra", "exists")

    def __init__(self, algebra: FiniteBooleanAlgebra, exists):
        if not isinstance(exists, Quantifier):
            exists = Quantifier(algebra, exists)
        elif exists.algebra != algebra:
            raise ValidationError("quantifier belongs to a different algebra")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "exists", exists)

    def __setattr__(self, name, value):
        raise AttributeError("MonadicAlgebra is immutable")

    def __eq__(self, other):
        if not isinstance(other, MonadicAlgebra):
            return NotImplemented
        return self.exists == other.exists

    def __hash__(self):
        return hash(self.exists)

    def __repr__(self):
        return f"MonadicAlgebra({list(self.algebra.labels)}, image={sorted(self.exists.image())})"

    @classmethod
    def of(cls, exists: Quantifier) -> MonadicAlgebra:
        return cls(exists.algebra, exists)

    def ex(self, p: int) -> int:
        return self.exists.table[p]

    def fa(self, p: int) -> int:
        return self.exists.universal(p)

    def forall(self, p: Element) -> Element:
        return Element(self.algebra, self.fa(_as_mask(self.algebra, p)))

    def to_json(self) -> dict[str, Any]:
        return self.exists.to_json()


def all_monadic_algebras(algebra: FiniteBooleanAlgebra) -> list[MonadicAlgebra]:
    return [MonadicAlgebra.of(q) for q in enumerate_quantifiers(algebra)]


def quantifier_law_suite(exists: Quantifier) -> LawReport:
    """The derived laws every quantifier must satisfy, checked exhaustively."""
    algebra = exists.algebra
    t = exists.table
    top = algebra.top_mask
    ser = algebra.serialize
    comp = lambda p: top ^ p
    fa = exists.universal
    masks = range(algebra.size)
    image = exists.image()

    names = [
        "exists 1 = 1",
        "idempotent",
        "p <= exists q implies exists p <= exists q",
        "monotone",
        "exists((exists p)') = (exists p)'",
        "fixed points are the image",
        "image is a Boolean subalgebra",
        "disjunctive",
        "exists p - exists q <= exists(p - q)",
        "exists p + exists q <= exists(p + q)",
        "closure operator",
        "exists p = least element of image above p",
        "forall 1 = 1",
        "forall p <= p",
        "forall(p | forall q) = forall p | forall q",
    ]
    laws = {n: LawChecker(n) for n in names}
    laws["exists 1 = 1"].check(t[top] == top, {"exists 1": ser(t[top])})
    laws["forall 1 = 1"].check(fa(top) == top, {"forall 1": ser(fa(top))})
    laws["image is a Boolean subalgebra"].check(bool(is_subalgebra(algebra, image)), {"image": sorted(ser(m) for m in image)})
    for p in masks:
        w = {"p": ser(p)}
        laws["idempotent"].check(t[t[p]] == t[p], w)
        laws["exists((exists p)') = (exists p)'"].check(t[comp(t[p])] == comp(t[p]), w)
        laws["fixed points are the image"].check((t[p] == p) == (p in image), w)
        laws["exists p = least element of image above p"].check(least_upper_in(image, p) == t[p], w)
        laws["forall p <= p"].check(_subset(fa(p), p), w)
    for p, q in product(masks, repeat=2):
        w = lambda: {"p": ser(p), "q": ser(q)}
        if _subset(p, t[q]):
            laws["p <= exists q implies exists p <= exists q"].check(_subset(t[p], t[q]), w)
        if _subset(p, q):
            laws["monotone"].check(_subset(t[p], t[q]), w)
        laws["disjunctive"].check(t[p | q] == t[p] | t[q], w)
        laws["exists p - exists q <= exists(p - q)"].check(_subset(t[p] & comp(t[q]), t[p & comp(q)]), w)
        laws["exists p + exists q <= exists(p + q)"].check(_subset(t[p] ^ t[q], t[p ^ q]), w)
        laws["forall(p | forall q) = forall p | forall q"].check(fa(p | fa(q)) == fa(p) | fa(q), w)
    closure = LawChecker("closure operator")
    for p, q in product(masks, repeat=2):
        closure.check(
            t[0] == 0 and _subset(p, t[p]) and t[t[p]] == t[p] and t[p | q] == t[p] | t[q],
            lambda: {"p": ser(p), "q": ser(q)},
        )
    laws["closure operator"] = closure
    report = LawReport(f"quantifier laws, image size {len(image)}, {algebra.atom_count} atoms")
    report.extend(laws[n].result() for n in names)
    return report


# ---------------------------------------------------------------- ideals


class Ideal:
    """A Boolean ideal of a finite algebra, stored as a set of masks."""

    __slots__ = ("algebra", "members")

    def __init__(self, algebra: FiniteBooleanAlgebra, members: Iterable, *, check: bool = True):
        members = frozenset(_as_mask(algebra, m) for m in members)
        if check:
            v = ideal_violation(algebra, members)
            if not v:
                raise ValidationError(f"not an ideal: {v.law} fails at {v.witness}", v.law, v.witness)
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "members", members)

    def __setattr__(self, name, value):
        raise AttributeError("Ideal is immutable")

    def __contains__(self, p) -> bool:
        return _as_mask(self.algebra, p) in self.members

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.algebra == other.algebra and self.members == other.members

    def __hash__(self):
        return hash((self.algebra, self.members))

    def __le__(self, other: Ideal) -> bool:
        return self.members <= other.members

    def __lt__(self, other: Ideal) -> bool:
        return self.members < other.members

    def __len__(self):
        return len(self.members)

    def __repr__(self):
        return "Ideal(" + ", ".join(repr(Element(self.algebra, m)) for m in sorted(self.members)) + ")"

    @property
    def generator(self) -> int:
        """The largest member; a finite ideal is the principal ideal below it."""
        g = 0
        for m in self.members:
            g |= m
        return g

    @property
    def is_proper(self) -> bool:
        return self.algebra.top_mask not in self.members

    def to_json(self) -> list[list[str]]:
        return [self.algebra.serialize(m) for m in sorted(self.members)]


def ideal_violation(algebra: FiniteBooleanAlgebra, members: frozenset[int]) -> Check:
    ser = algebra.serialize
    if 0 not in members:
        return Check(False, "contains 0")
    for p in members:
        for q in range(algebra.size):
            if _subset(q, p) and q not in members:
                return Check(False, "downward closed", {"p": ser(p), "q": ser(q)})
        for q in members:
            if p | q not in members:
                return Check(False, "closed under join", {"p": ser(p), "q": ser(q)})
    return Check(True)


def is_boolean_ideal(algebra: FiniteBooleanAlgebra, members: Iterable) -> Check:
    return ideal_violation(algebra, frozenset(_as_mask(algebra, m) for m in members))


def principal_ideal(algebra: FiniteBooleanAlgebra, generator) -> Ideal:
    g = _as_mask(algebra, generator)
    return Ideal(algebra, (q for q in range(algebra.size) if _subset(q, g)), check=False)


def boolean_ideals(algebra: FiniteBooleanAlgebra) -> list[Ideal]:
    """All ideals, one principal ideal per generator, in generator-mask order."""
    return [principal_ideal(algebra, g) for g in range(algebra.size)]


def maximal_boolean_ideals(algebra: FiniteBooleanAlgebra) -> list[Ideal]:
    """Principal ideals below a coatom, ordered by the missing atom."""
    top = algebra.top_mask
    return [principal_ideal(algebra, top ^ a.mask) for a in algebra.atoms()]


def is_monadic_ideal(ma: MonadicAlgebra, ideal: Ideal) -> bool:
    return all(ma.ex(p) in ideal.members for p in ideal.members)


def monadic_ideals(ma: MonadicAlgebra) -> list[Ideal]:
    return [i for i in boolean_ideals(ma.algebra) if is_monadic_ideal(ma, i)]


def maximal_among(ideals: Sequence[Ideal]) -> list[Ideal]:
    """Proper members of ``ideals`` not strictly inside another proper member."""
    proper = [i for i in ideals if i.is_proper]
    return [i for i in proper if not any(i < j for j in proper)]


def maximal_monadic_ideals(ma: MonadicAlgebra) -> list[Ideal]:
    return maximal_among(monadic_ideals(ma))


def istar(ma: MonadicAlgebra, ideal: Ideal) -> Ideal:
    """I* = {p : ∃p ∈ I}, the largest monadic ideal inside a Boolean ideal I."""
    if not isinstance(ideal, Ideal) or ideal.algebra != ma.algebra:
        raise PreconditionError("istar needs a Boolean ideal of the same algebra")
    v = ideal_violation(ma.algebra, ideal.members)
    if not v:
        raise PreconditionError(f"input is not an ideal ({v.law})")
    return Ideal(ma.algebra, (p for p in range(ma.algebra.size) if ma.ex(p) in ideal.members), check=False)


# ---------------------------------------------------------------- quotients


def congruence_classes(algebra: FiniteBooleanAlgebra, ideal: Ideal) -> list[frozenset[int]]:
    """Classes of p ≡ q iff p + q ∈ I, ordered by their least mask."""
    seen: set[int] = set()
    classes = []
    for p in range(algebra.size):
        if p in seen:
            continue
        cls = frozenset(q for q in range(algebra.size) if p ^ q in ideal.members)
        seen |= cls
        classes.append(cls)
    return classes


def _compress(mask: int, keep: Sequence[int]) -> int:
    out = 0
    for j, i in enumerate(keep):
        if mask >> i & 1:
            out |= 1 << j
    return out


@dataclass(frozen=True)
class BooleanQuotient:
    """A/I realized as the powerset of the atoms outside the generator of I.

    ``project[p]`` is the mask of [p] in ``target``; ``classes`` lists the
    congruence classes in the same order as the target masks.
    """

    source: FiniteBooleanAlgebra
    ideal: Ideal
    target: FiniteBooleanAlgebra
    project: tuple[int, ...]
    classes: tuple[frozenset[int], ...]

    def __call__(self, p: Element) -> Element:
        return Element(self.target, self.project[_as_mask(self.source, p)])

    def mapping(self) -> dict[Element, Element]:
        return {Element(self.source, p): Element(self.target, v) for p, v in enumerate(self.project)}

    def descends(self, table: Sequence[int]) -> tuple[int, int] | None:
        """First pair p ≡ q with table[p] ≢ table[q], or None if compatible."""
        for cls in self.classes:
            ordered = sorted(cls)
            base = self.project[table[ordered[0]]]
            for q in ordered[1:]:
                if self.project[table[q]] != base:
                    return ordered[0], q
        return None

    def induced(self, table: Sequence[int]) -> tuple[int, ...]:
        """The table [p] ↦ [table p] on the target; assumes compatibility."""
        out = [0] * self.target.size
        for p in range(self.source.size):
            out[self.project[p]] = self.project[table[p]]
        return tuple(out)


def boolean_quotient(algebra: FiniteBooleanAlgebra, ideal: Ideal) -> BooleanQuotient:
    if not ideal.is_proper:
        raise PreconditionError("cannot take the quotient by an improper ideal")
    classes = congruence_classes(algebra, ideal)
    g = ideal.generator
    keep = [i for i in range(algebra.atom_count) if not g >> i & 1]
    target = FiniteBooleanAlgebra(algebra.labels[i] for i in keep)
    project = tuple(_compress(p, keep) for p in range(algebra.size))
    if len(classes) != target.size:
        raise AssertionError("congruence classes do not match the quotient size")
    by_target = [None] * target.size
    for cls in classes:
        images = {project[p] for p in cls}
        if len(images) != 1:
            raise AssertionError("representatives disagree within a congruence class")
        by_target[images.pop()] = cls
    return BooleanQuotient(algebra, ideal, target, project, tuple(by_target))


@dataclass(frozen=True)
class MonadicQuotient:
    source: MonadicAlgebra
    target: MonadicAlgebra
    boolean: BooleanQuotient

    @property
    def ideal(self) -> Ideal:
        return self.boolean.ideal

    def __call__(self, p: Element) -> Element:
        return self.boolean(p)

    def mapping(self) -> dict[Element, Element]:
        return self.boolean.mapping()


def quotient(ma: MonadicAlgebra, ideal: Ideal) -> MonadicQuotient:
    """A/I with ∃[p] = [∃p]; the canonical map is a monadic homomorphism."""
    if ideal.algebra != ma.algebra:
        raise PreconditionError("ideal belongs to a different algebra")
    if not is_monadic_ideal(ma, ideal):
        raise PreconditionError("quotient needs a monadic ideal")
    bq = boolean_quotient(ma.algebra, ideal)
    clash = bq.descends(ma.exists.table)
    if clash is not None:
        raise AssertionError(f"∃ does not descend along a monadic ideal: {clash}")
    target = MonadicAlgebra(bq.target, bq.induced(ma.exists.table))
    return MonadicQuotient(ma, target, bq)


# ---------------------------------------------------------------- homomorphisms


def _coerce_map(source: FiniteBooleanAlgebra, target: FiniteBooleanAlgebra, f) -> tuple[int, ...]:
    if callable(f) and not isinstance(f, Mapping):
        f = {e: f(e) for e in source.elements()}
    out = [None] * source.size
    for k, v in f.items():
        out[_as_mask(source, k)] = _as_mask(target, v)
    missing = [source.serialize(m) for m, v in enumerate(out) if v is None]
    if missing:
        raise ValidationError(f"map is partial: no image for {missing}", witness=missing)
    return tuple(out)


def boolean_homomorphism_violation(source: FiniteBooleanAlgebra, target: FiniteBooleanAlgebra, f: Sequence[int]) -> Check:
    st, tt = source.top_mask, target.top_mask
    ser = source.serialize
    if f[0] != 0:
        return Check(False, "preserves 0")
    if f[st] != tt:
        return Check(False, "preserves 1")
    for p in range(source.size):
        if f[st ^ p] != tt ^ f[p]:
            return Check(False, "preserves complement", {"p": ser(p)})
        for q in range(source.size):
            if f[p & q] != f[p] & f[q]:
                return Check(False, "preserves meet", {"p": ser(p), "q": ser(q)})
            if f[p | q] != f[p] | f[q]:
                return Check(False, "preserves join", {"p": ser(p), "q": ser(q)})
    return Check(True)


def is_monadic_homomorphism(f, source: MonadicAlgebra, target: MonadicAlgebra) -> Check:
    """Boolean homomorphism that commutes with ∃; ``f`` maps Elements to Elements."""
    table = _coerce_map(source.algebra, target.algebra, f)
    v = boolean_homomorphism_violation(source.algebra, target.algebra, table)
    if not v:
        return v
    for p in range(source.algebra.size):
        if table[source.ex(p)] != target.ex(table[p]):
            return Check(False, "commutes with exists", {"p": source.algebra.serialize(p)})
    return Check(True)


# ---------------------------------------------------------------- simplicity


def is_simple(ma: MonadicAlgebra) -> bool:
    """Nontrivial and {0} is the only proper monadic ideal."""
    if ma.algebra.size < 2:
        return False
    return all(i.members == {0} for i in monadic_ideals(ma) if i.is_proper)


@dataclass(frozen=True)
class Semisimplicity:
    ok: bool
    maximal_ideals: tuple[Ideal, ...]
    certificate: dict[int, Ideal]

    def __bool__(self):
        return self.ok

    def to_json(self, algebra: FiniteBooleanAlgebra) -> dict[str, Any]:
        return {
            "semisimple": self.ok,
            "maximal_ideals": [i.to_json() for i in self.maximal_ideals],
            "certificate": [[algebra.serialize(p), i.to_json()] for p, i in sorted(self.certificate.items())],
        }


def is_semisimple(ma: MonadicAlgebra) -> Semisimplicity:
    """Intersection of the maximal monadic ideals is {0}.

    The certificate names, for each p ≠ 0, the first maximal monadic ideal
    (in generator-mask order) that excludes p.
    """
    _guard(ma.algebra, what="semisimplicity check")
    maxi = maximal_monadic_ideals(ma)
    cert = {}
    for p in range(1, ma.algebra.size):
        for i in maxi:
            if p not in i.members:
                cert[p] = i
                break
    return Semisimplicity(len(cert) == ma.algebra.size - 1, tuple(maxi), cert)


def verify_semisimplicity_certificate(ma: MonadicAlgebra, cert: Mapping[int, Ideal]) -> Check:
    """Re-derive from scratch that each certificate ideal is maximal monadic and excludes its element."""
    ser = ma.algebra.serialize
    candidates = [
        Ideal(ma.algebra, members, check=False)
        for members in _all_ideal_member_sets(ma.algebra)
        if all(ma.ex(p) in members for p in members)
    ]
    for p in range(1, ma.algebra.size):
        if p not in cert:
            return Check(False, "covers every nonzero element", {"p": ser(p)})
        i = cert[p]
        if p in i.members:
            return Check(False, "excludes its element", {"p": ser(p)})
        if not ideal_violation(ma.algebra, i.members) or not all(ma.ex(q) in i.members for q in i.members):
            return Check(False, "is a monadic ideal", {"p": ser(p)})
        if not i.is_proper or any(i.members < j.members and j.is_proper for j in candidates):
            return Check(False, "is maximal", {"p": ser(p)})
    return Check(True)


def _all_ideal_member_sets(algebra: FiniteBooleanAlgebra) -> Iterator[frozenset[int]]:
    """Every ideal of a finite algebra is principal; membership tested by join."""
    n = algebra.size
    for g in range(n):
        yield frozenset(q for q in range(n) if q | g == g)


def refuting_interpretation(ma: MonadicAlgebra, ideal: Ideal, p: int) -> MonadicQuotient | None:
    """An interpretation of the logic (A, I) into a simple algebra with f(p) ≠ 1.

    Found as the quotient by a maximal monadic ideal containing I and
    avoiding p′.  Returns None when no such ideal exists, which happens
    exactly when p′ ∈ I (p is provable).
    """
    comp = ma.algebra.top_mask ^ p
    for j in maximal_monadic_ideals(ma):
        if ideal.members <= j.members and comp not in j.members:
            return quotient(ma, j)
    return None


def monadic_adequacy_report(ma: MonadicAlgebra) -> LawReport:
    """Soundness and completeness of every monadic logic (A, I) at this size."""
    ser = ma.algebra.serialize
    top = ma.algebra.top_mask
    complete = LawChecker("every unprovable element is refuted by an interpretation")
    simple_target = LawChecker("interpretations land in simple O-valued algebras")
    sound = LawChecker("provable elements are true in every interpretation")
    hom = LawChecker("interpretations are monadic homomorphisms killing I")
    maxi = maximal_monadic_ideals(ma)
    quotients = {j: quotient(ma, j) for j in maxi}
    for ideal in monadic_ideals(ma):
        if not ideal.is_proper:
            continue
        interps = [quotients[j] for j in maxi if ideal.members <= j.members]
        for f in interps:
            ok = is_monadic_homomorphism(f.mapping(), ma, f.target).ok and all(
                f.boolean.project[q] == 0 for q in ideal.members
            )
            hom.check(ok, lambda: {"ideal": ideal.to_json(), "kernel": f.ideal.to_json()})
            simple_target.check(
                f.target.exists.is_simple() and is_simple(f.target),
                lambda: {"kernel": f.ideal.to_json()},
            )
        for p in range(ma.algebra.size):
            if top ^ p in ideal.members:
                for f in interps:
                    sound.check(f.boolean.project[p] == f.target.algebra.top_mask, lambda: {"p": ser(p)})
            else:
                f = refuting_interpretation(ma, ideal, p)
                complete.check(
                    f is not None and f.boolean.project[p] != f.target.algebra.top_mask,
                    lambda: {"ideal": ideal.to_json(), "p": ser(p)},
                )
    report = LawReport(f"monadic logic adequacy, {ma!r}")
    report.extend(c.result() for c in (sound, complete, simple_target, hom))
    return report


def functional_representation(ma: MonadicAlgebra) -> Callable[[int], tuple[int, ...]]:
    """For a simple algebra, p ↦ its indicator over the atoms (an O-valued function).

    Under this map ∃ becomes the constant join of the values, which is how a
    simple monadic algebra is an O-valued functional monadic algebra.
    """
    if not ma.exists.is_simple():
        raise PreconditionError("only simple monadic algebras are O-valued functional algebras")
    n = ma.algebra.atom_count
    return lambda p: tuple((p >> i) & 1 for i in range(n))
