"""Ubiquity operators Υ on finite monadic algebras.

Υ is an explicit table validated against three clauses:

  (i)   Υp ∧ Υq ≤ Υ(p ∧ q)
  (ii)  Υp ≤ Υ(p ∨ q)
  (iii) ∀p ≤ Υp ≤ ∃p

Interior operators of pseudo-topological spaces are one source of such
tables, but the clauses admit operators that are neither deflationary nor
idempotent, and those are kept first-class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Iterable, Iterator, Mapping, Sequence

from .boolalg import Element, FiniteBooleanAlgebra, standard_algebra
from .errors import PreconditionError, ValidationError
from .guards import guard
from .monadic import (
    Check,
    Ideal,
    MonadicAlgebra,
    MonadicQuotient,
    Quantifier,
    _coerce_map,
    boolean_homomorphism_violation,
    boolean_ideals,
    coerce_table,
    enumerate_quantifiers,
    ideal_violation,
    is_monadic_ideal,
    istar,
    maximal_among,
    maximal_boolean_ideals,
    quotient,
    simple_quantifier,
)
from .pseudotop import PseudoTopology
from .report import LawChecker, LawReport, LawResult

MAX_ENUM_ELEMENTS = 8
MAX_SUITE_ELEMENTS = 16


def _sub(p: int, q: int) -> bool:
    return p & ~q == 0


def upsilon_violation(base: MonadicAlgebra, table: Sequence[int]) -> Check:
    """First failing clause with its witness pair, scanning pairs in mask order."""
    n = base.algebra.size
    ser = base.algebra.serialize
    for p, q in product(range(n), repeat=2):
        if not _sub(table[p] & table[q], table[p & q]):
            return Check(False, "(i)", {"p": ser(p), "q": ser(q)})
    for p, q in product(range(n), repeat=2):
        if not _sub(table[p], table[p | q]):
            return Check(False, "(ii)", {"p": ser(p), "q": ser(q)})
    for p in range(n):
        if not (_sub(base.fa(p), table[p]) and _sub(table[p], base.ex(p))):
            return Check(False, "(iii)", {"p": ser(p)})
    return Check(True)


class UbiquityAlgebra:
    __slots__ = ("base", "upsilon")

    def __init__(self, base: MonadicAlgebra, upsilon, *, check: bool = True):
        table = coerce_table(base.algebra, upsilon)
        if check:
            v = upsilon_violation(base, table)
            if not v:
                raise ValidationError(f"not a ubiquity operator: clause {v.law} fails at {v.witness}", v.law, v.witness)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "upsilon", table)

    def __setattr__(self, name, value):
        raise AttributeError("UbiquityAlgebra is immutable")

    def __eq__(self, other):
        if not isinstance(other, UbiquityAlgebra):
            return NotImplemented
        return self.base == other.base and self.upsilon == other.upsilon

    def __hash__(self):
        return hash((self.base, self.upsilon))

    def __repr__(self):
        alg = self.base.algebra
        body = ", ".join(f"{Element(alg, p)!r}↦{Element(alg, v)!r}" for p, v in enumerate(self.upsilon))
        return f"UbiquityAlgebra({list(alg.labels)}, Υ: {body})"

    @property
    def algebra(self) -> FiniteBooleanAlgebra:
        return self.base.algebra

    def ups(self, p: int) -> int:
        return self.upsilon[p]

    def __call__(self, p: Element) -> Element:
        return Element(self.algebra, self.upsilon[p.mask])

    def to_json(self) -> dict[str, Any]:
        ser = self.algebra.serialize
        return {
            "algebra": list(self.algebra.labels),
            "exists": [[ser(p), ser(v)] for p, v in enumerate(self.base.exists.table)],
            "upsilon": [[ser(p), ser(v)] for p, v in enumerate(self.upsilon)],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> UbiquityAlgebra:
        algebra = FiniteBooleanAlgebra(data["algebra"])
        ex = {algebra.element(p): algebra.element(v) for p, v in data["exists"]}
        ups = {algebra.element(p): algebra.element(v) for p, v in data["upsilon"]}
        return validate_upsilon(MonadicAlgebra(algebra, Quantifier(algebra, ex)), ups)


def validate_upsilon(base: MonadicAlgebra, table) -> UbiquityAlgebra:
    return UbiquityAlgebra(base, table)


def identity_upsilon(base: MonadicAlgebra) -> UbiquityAlgebra:
    return UbiquityAlgebra(base, range(base.algebra.size))


def upsilon_from_space(space: PseudoTopology) -> UbiquityAlgebra:
    """P(E) with the simple quantifier and Υ = interior operator of the space."""
    algebra = FiniteBooleanAlgebra(space.carrier)
    base = MonadicAlgebra(algebra, simple_quantifier(algebra))
    return UbiquityAlgebra(base, [space.interior_mask(p) for p in range(algebra.size)])


def enumerate_upsilons(base: MonadicAlgebra) -> list[UbiquityAlgebra]:
    """All tables satisfying (i)–(iii), in lexicographic order of the table.

    Backtracking assigns masks in increasing order, drawing Υp from the
    interval [∀p, ∃p]; a clause instance is checked once all of its entries
    are known.
    """
    alg = base.algebra
    n = alg.size
    guard(n, MAX_ENUM_ELEMENTS, f"Υ enumeration is limited to {MAX_ENUM_ELEMENTS} elements, got {n}")
    table: list[int | None] = [None] * n
    found: list[tuple[int, ...]] = []

    def candidates(p: int) -> list[int]:
        lo, hi = base.fa(p), base.ex(p)
        free = hi & ~lo
        out = []
        sub = free
        while True:
            out.append(lo | sub)
            if sub == 0:
                break
            sub = (sub - 1) & free
        return sorted(out)

    def consistent(m: int) -> bool:
        # every clause instance whose entries are all known and that involves m
        tm = table[m]
        for q in range(n):
            tq = table[q]
            if tq is None:
                continue
            t_meet = table[m & q]
            if t_meet is not None and not _sub(tm & tq, t_meet):
                return False
            t_join = table[m | q]
            if t_join is not None and not (_sub(tm, t_join) and _sub(tq, t_join)):
                return False
            if m & q == q and not _sub(tq, tm):
                return False
        for p in range(n):
            tp = table[p]
            if tp is None or p & m != m:
                continue
            for q in range(p, n):
                tq = table[q]
                if tq is not None and p & q == m and not _sub(tp & tq, tm):
                    return False
        return True

    def extend(m: int):
        if m == n:
            found.append(tuple(table))
            return
        for v in candidates(m):
            table[m] = v
            if consistent(m):
                extend(m + 1)
        table[m] = None

    extend(0)
    return [UbiquityAlgebra(base, t, check=False) for t in found]


def all_ubiquity_algebras(atom_count: int) -> Iterator[UbiquityAlgebra]:
    """Every ubiquity algebra on P(atoms), quantifiers in enumeration order."""
    for q in enumerate_quantifiers(standard_algebra(atom_count)):
        yield from enumerate_upsilons(MonadicAlgebra.of(q))


# ---------------------------------------------------------------- law suite


def ubiq_law_suite(u: UbiquityAlgebra) -> LawReport:
    alg = u.algebra
    top = alg.top_mask
    ser = alg.serialize
    t = u.upsilon
    ex = u.base.ex
    masks = range(alg.size)
    names = [
        "U1 = 1",
        "U0 = 0",
        "Up & Uq <= exists(p & q)",
        "Up & Up' = 0",
        "Up <= (Up')'",
        "U(p | p') = 1",
        "p <= q implies Up <= Uq",
        "Up & Uq <= Up | Uq <= U(p | q)",
        "U(p & q) <= Up",
        "U(p & q) = Up & Uq",
    ]
    laws = {n: LawChecker(n) for n in names}
    laws["U1 = 1"].check(t[top] == top, {"U1": ser(t[top])})
    laws["U0 = 0"].check(t[0] == 0, {"U0": ser(t[0])})
    for p in masks:
        w = {"p": ser(p)}
        c = top ^ p
        laws["Up & Up' = 0"].check(t[p] & t[c] == 0, w)
        laws["Up <= (Up')'"].check(_sub(t[p], top ^ t[c]), w)
        laws["U(p | p') = 1"].check(t[p | c] == top, w)
    for p, q in product(masks, repeat=2):
        w = lambda: {"p": ser(p), "q": ser(q)}
        laws["Up & Uq <= exists(p & q)"].check(_sub(t[p] & t[q], ex(p & q)), w)
        if _sub(p, q):
            laws["p <= q implies Up <= Uq"].check(_sub(t[p], t[q]), w)
        laws["Up & Uq <= Up | Uq <= U(p | q)"].check(
            _sub(t[p] & t[q], t[p] | t[q]) and _sub(t[p] | t[q], t[p | q]), w
        )
        laws["U(p & q) <= Up"].check(_sub(t[p & q], t[p]), w)
        laws["U(p & q) = Up & Uq"].check(t[p & q] == t[p] & t[q], w)
    report = LawReport(f"ubiquity laws, {alg.atom_count} atoms")
    report.extend(laws[n].result() for n in names)
    return report


def topological_extras(u: UbiquityAlgebra) -> LawReport:
    """Laws of interior operators that the three clauses do not imply."""
    ser = u.algebra.serialize
    t = u.upsilon
    deflationary = LawChecker("Up <= p")
    idempotent = LawChecker("UUp = Up")
    for p in range(u.algebra.size):
        deflationary.check(_sub(t[p], p), {"p": ser(p)})
        idempotent.check(t[t[p]] == t[p], {"p": ser(p)})
    report = LawReport("interior-operator extras")
    report.extend([deflationary.result(), idempotent.result()])
    return report


# ---------------------------------------------------------------- ideals


def is_ubiquity_ideal(u: UbiquityAlgebra, ideal: Ideal) -> bool:
    if ideal.algebra != u.algebra or not ideal_violation(u.algebra, ideal.members):
        return False
    return is_monadic_ideal(u.base, ideal) and all(u.ups(p) in ideal.members for p in ideal.members)


def ubiquity_ideals(u: UbiquityAlgebra) -> list[Ideal]:
    return [i for i in boolean_ideals(u.algebra) if is_ubiquity_ideal(u, i)]


def maximal_ubiquity_ideals(u: UbiquityAlgebra) -> list[Ideal]:
    return maximal_among(ubiquity_ideals(u))


def is_ubiquity_simple(u: UbiquityAlgebra) -> bool:
    return u.algebra.size >= 2 and all(i.members == {0} for i in ubiquity_ideals(u) if i.is_proper)


def is_ubiquity_homomorphism(f, source: UbiquityAlgebra, target: UbiquityAlgebra) -> Check:
    table = _coerce_map(source.algebra, target.algebra, f)
    v = boolean_homomorphism_violation(source.algebra, target.algebra, table)
    if not v:
        return v
    ser = source.algebra.serialize
    for p in range(source.algebra.size):
        if table[source.base.ex(p)] != target.base.ex(table[p]):
            return Check(False, "commutes with exists", {"p": ser(p)})
        if table[source.ups(p)] != target.ups(table[p]):
            return Check(False, "commutes with upsilon", {"p": ser(p)})
    return Check(True)


# ---------------------------------------------------------------- quotients


@dataclass(frozen=True)
class UbiquityQuotient:
    source: UbiquityAlgebra
    target: UbiquityAlgebra
    monadic: MonadicQuotient

    @property
    def ideal(self) -> Ideal:
        return self.monadic.ideal

    def mapping(self) -> dict[Element, Element]:
        return self.monadic.mapping()


@dataclass(frozen=True)
class DescentVerdict:
    """Whether Υ[p] = [Υp] is well defined modulo a ubiquity ideal.

    ``witness`` is the first pair (p, q) in mask order with p + q ∈ I but
    Υp + Υq ∉ I.  When Υ descends, ``quotient`` is the quotient algebra and
    ``quotient_valid`` records whether it passed validation again.
    """

    ideal: Ideal
    descends: bool
    witness: tuple[int, int] | None = None
    quotient: UbiquityQuotient | None = None
    quotient_valid: bool | None = None
    violation: Check | None = None

    def to_json(self) -> dict[str, Any]:
        alg = self.ideal.algebra
        out: dict[str, Any] = {"ideal": self.ideal.to_json(), "descends": self.descends}
        if self.witness is not None:
            p, q = self.witness
            out["witness"] = {"p": alg.serialize(p), "q": alg.serialize(q)}
        if self.descends:
            out["quotient_valid"] = self.quotient_valid
            if self.quotient is not None:
                out["quotient"] = self.quotient.target.to_json() if self.quotient_valid else None
            if self.violation is not None and not self.violation.ok:
                out["quotient_violation"] = {"clause": self.violation.law, "witness": self.violation.witness}
        return out


def quotient_descent_check(u: UbiquityAlgebra, ideal: Ideal) -> DescentVerdict:
    if ideal.algebra != u.algebra:
        raise PreconditionError("ideal belongs to a different algebra")
    if not ideal.is_proper:
        raise PreconditionError("descent check needs a proper ideal")
    if not is_ubiquity_ideal(u, ideal):
        raise PreconditionError("descent check needs a ubiquity ideal")
    n = u.algebra.size
    members = ideal.members
    t = u.upsilon
    for p, q in product(range(n), repeat=2):
        if p ^ q in members and t[p] ^ t[q] not in members:
            return DescentVerdict(ideal, False, (p, q))
    mq = quotient(u.base, ideal)
    induced = mq.boolean.induced(t)
    v = upsilon_violation(mq.target, induced)
    target = UbiquityAlgebra(mq.target, induced, check=False)
    return DescentVerdict(ideal, True, None, UbiquityQuotient(u, target, mq), v.ok, v)


def ubiquity_quotient(u: UbiquityAlgebra, ideal: Ideal) -> UbiquityQuotient:
    verdict = quotient_descent_check(u, ideal)
    if not verdict.descends:
        p, q = verdict.witness
        ser = u.algebra.serialize
        raise PreconditionError(f"Υ does not descend modulo this ideal: {ser(p)} ≡ {ser(q)} but their Υ-images differ")
    if not verdict.quotient_valid:
        raise ValidationError("induced Υ on the quotient violates the ubiquity clauses")
    return verdict.quotient


@dataclass
class AuditReport:
    """Outcome of sweeping quotient_descent_check over all small algebras."""

    max_atoms: int
    records: list[dict[str, Any]] = field(default_factory=list)
    invariant: LawResult | None = None

    @property
    def counts(self) -> dict[str, int]:
        d = sum(1 for r in self.records if r["descends"])
        valid = sum(1 for r in self.records if r["descends"] and r["quotient_valid"])
        return {"pairs": len(self.records), "descends": d, "fails": len(self.records) - d, "valid_quotients": valid}

    @property
    def passed(self) -> bool:
        return self.invariant is not None and self.invariant.passed


def quotient_audit(max_atoms: int = 3) -> AuditReport:
    """Descent verdict for every (ubiquity algebra, proper ubiquity ideal) pair.

    Also checks Υp ∨ Υq ≤ Υ(p ∨ q) on every swept algebra.
    """
    guard(2**max_atoms, 8, "quotient audit is limited to at most 8 carrier elements")
    report = AuditReport(max_atoms)
    join_law = LawChecker("Up | Uq <= U(p | q)")
    for k in range(1, max_atoms + 1):
        for ai, u in enumerate(all_ubiquity_algebras(k)):
            t = u.upsilon
            ser = u.algebra.serialize
            for p, q in product(range(u.algebra.size), repeat=2):
                join_law.check(_sub(t[p] | t[q], t[p | q]), lambda: {"algebra": u.to_json(), "p": ser(p), "q": ser(q)})
            for ideal in ubiquity_ideals(u):
                if not ideal.is_proper:
                    continue
                verdict = quotient_descent_check(u, ideal)
                rec = {"atoms": k, "algebra_index": ai, "exists_image": sorted(ser(m) for m in u.base.exists.image())}
                rec["upsilon"] = [ser(v) for v in t]
                rec.update(verdict.to_json())
                rec.pop("quotient", None)
                report.records.append(rec)
    report.invariant = join_law.result()
    return report


# ---------------------------------------------------------------- simplicity


def ubiq_simplicity_suite(u: UbiquityAlgebra) -> LawReport:
    """Simplicity, semisimplicity through I*, and the existence theorem.

    The existence check (c) looks for a maximal ubiquity ideal avoiding p₀
    along which Υ descends; the quotient map is then a ubiquity
    homomorphism onto a simple ubiquity algebra with f(p₀) ≠ 0.
    """
    alg = u.algebra
    guard(alg.size, MAX_SUITE_ELEMENTS, f"simplicity suite is limited to {MAX_SUITE_ELEMENTS} elements")
    ser = alg.serialize
    ideals = ubiquity_ideals(u)
    maxi = maximal_among(ideals)

    simple = LawChecker("(a) simple iff exists is simple")
    simple.check(is_ubiquity_simple(u) == u.base.exists.is_simple(), {"exists_image": sorted(ser(m) for m in u.base.exists.image())})

    same = LawChecker("every monadic ideal is a ubiquity ideal")
    for i in boolean_ideals(alg):
        if is_monadic_ideal(u.base, i):
            same.check(is_ubiquity_ideal(u, i), lambda: {"ideal": i.to_json()})

    istar_max = LawChecker("(b) I* of a maximal Boolean ideal is a maximal ubiquity ideal")
    stars = []
    for i0 in maximal_boolean_ideals(alg):
        s = istar(u.base, i0)
        stars.append(s)
        istar_max.check(
            is_ubiquity_ideal(u, s) and s in maxi and s.members <= i0.members,
            lambda: {"boolean_ideal": i0.to_json(), "istar": s.to_json()},
        )
    semisimple = LawChecker("(b) semisimple: maximal ubiquity ideals meet in {0}")
    for p in range(1, alg.size):
        semisimple.check(
            any(p not in s.members for s in stars) and any(p not in j.members for j in maxi), {"p": ser(p)}
        )

    existence = LawChecker("(c) ubiquity homomorphism onto a simple algebra with f(p0) != 0")
    descending = []
    for j in maxi:
        v = quotient_descent_check(u, j)
        if v.descends and v.quotient_valid:
            descending.append(v.quotient)
    for p in range(1, alg.size):
        ok = False
        for f in descending:
            if p not in f.ideal.members:
                ok = (
                    f.monadic.boolean.project[p] != 0
                    and is_ubiquity_simple(f.target)
                    and is_ubiquity_homomorphism(f.mapping(), u, f.target).ok
                )
                if ok:
                    break
        existence.check(ok, {"p0": ser(p)})

    report = LawReport(f"ubiquity simplicity suite, {alg.atom_count} atoms")
    report.extend(c.result() for c in (simple, same, istar_max, semisimple, existence))
    return report


def is_ubiquity_semisimple(u: UbiquityAlgebra) -> bool:
    maxi = maximal_ubiquity_ideals(u)
    return all(any(p not in j.members for j in maxi) for p in range(1, u.algebra.size))


def ubiquity_adequacy_report(u: UbiquityAlgebra) -> LawReport:
    """Completeness of every ubiquity logic (U, I) at this size.

    An interpretation is a monadic homomorphism into a simple O-valued
    algebra that sends I to 0.  For every p with p′ ∉ I one must exist with
    f(p) ≠ 1.  ``info`` counts how many of the refuting interpretations
    also commute with Υ.
    """
    alg = u.algebra
    ser = alg.serialize
    top = alg.top_mask
    maxi = maximal_ubiquity_ideals(u)
    quotients = {j: quotient(u.base, j) for j in maxi}
    descends = {j: quotient_descent_check(u, j).descends for j in maxi}
    complete = LawChecker("every unprovable element is refuted by an interpretation")
    sound = LawChecker("provable elements are true in every interpretation")
    preserving = 0
    refuted = 0
    for ideal in ubiquity_ideals(u):
        if not ideal.is_proper:
            continue
        above = [j for j in maxi if ideal.members <= j.members]
        for p in range(alg.size):
            if top ^ p in ideal.members:
                for j in above:
                    f = quotients[j]
                    sound.check(f.boolean.project[p] == f.target.algebra.top_mask, lambda: {"p": ser(p)})
                continue
            hit = next((j for j in above if top ^ p not in j.members), None)
            ok = hit is not None and quotients[hit].target.exists.is_simple()
            complete.check(ok, lambda: {"ideal": ideal.to_json(), "p": ser(p)})
            if ok:
                refuted += 1
                if any(descends[j] for j in above if top ^ p not in j.members):
                    preserving += 1
    report = LawReport("ubiquity logic adequacy")
    report.extend([sound.result(), complete.result()])
    report.info = {"refuted": refuted, "refuted_by_upsilon_preserving_map": preserving}
    return report
