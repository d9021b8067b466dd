"""Pseudo-topological spaces (E, Ω).

Ω is a family of subsets of a finite carrier E that is closed under binary
intersection and union, contains E, and does not contain ∅.  Unlike a
topology, the empty set is never open.  Subsets are handled as frozensets
of labels at the API boundary and as bit masks internally (bit ``i`` is
``carrier[i]``).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Any, Iterable, Mapping, NamedTuple

from .errors import PreconditionError, ValidationError
from .guards import guard
from .report import LawChecker, LawReport

MAX_CARRIER = 4


class Openness(NamedTuple):
    is_open: bool
    is_closed: bool


class PseudoTopology:
    __slots__ = ("carrier", "opens", "_index")

    def __init__(self, carrier: Iterable[str], opens: Iterable[int]):
        """Build from a label tuple and open masks; call :func:`validate_space`
        for input that has not been checked yet."""
        carrier = tuple(carrier)
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "opens", frozenset(opens))
        object.__setattr__(self, "_index", {l: i for i, l in enumerate(carrier)})

    def __setattr__(self, name, value):
        raise AttributeError("PseudoTopology is immutable")

    def __eq__(self, other):
        if not isinstance(other, PseudoTopology):
            return NotImplemented
        return self.carrier == other.carrier and self.opens == other.opens

    def __hash__(self):
        return hash((self.carrier, self.opens))

    def __repr__(self):
        return f"PseudoTopology({list(self.carrier)}, {self.open_sets()})"

    @property
    def full_mask(self) -> int:
        return (1 << len(self.carrier)) - 1

    def mask(self, subset: Iterable[str]) -> int:
        m = 0
        for l in subset:
            try:
                m |= 1 << self._index[l]
            except KeyError:
                raise PreconditionError(f"{l!r} is not in the carrier {list(self.carrier)}") from None
        return m

    def labels(self, mask: int) -> frozenset[str]:
        return frozenset(l for i, l in enumerate(self.carrier) if mask >> i & 1)

    def sorted_labels(self, mask: int) -> list[str]:
        return [l for i, l in enumerate(self.carrier) if mask >> i & 1]

    def open_sets(self) -> list[list[str]]:
        """Opens in canonical order: by size, then by carrier position."""
        return [self.sorted_labels(m) for m in sorted(self.opens, key=_canonical_key)]

    def interior_mask(self, a: int) -> int:
        """Union of the opens inside ``a``; empty when none fits."""
        out = 0
        for o in self.opens:
            if o & ~a == 0:
                out |= o
        return out

    def interior(self, subset: Iterable[str]) -> frozenset[str]:
        return self.labels(self.interior_mask(self.mask(subset)))

    def is_open_mask(self, a: int) -> bool:
        return a & ~self.interior_mask(a) == 0

    def is_closed_mask(self, a: int) -> bool:
        return (self.full_mask ^ a) in self.opens

    def to_json(self) -> dict[str, Any]:
        return {"domain": list(self.carrier), "opens": self.open_sets()}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> PseudoTopology:
        return validate_space(data["domain"], data["opens"])


def _canonical_key(mask: int):
    return (bin(mask).count("1"), [i for i in range(mask.bit_length()) if mask >> i & 1])


def clause_violation(full: int, opens: frozenset[int]):
    """First failing clause as ``(clause, witness masks)`` or None."""
    ordered = sorted(opens)
    for a in ordered:
        for b in ordered:
            if a & b not in opens:
                return "(i) closed under intersection", (a, b)
    for a in ordered:
        for b in ordered:
            if a | b not in opens:
                return "(ii) closed under union", (a, b)
    if full not in opens:
        return "(iii) carrier is open", ()
    if 0 in opens:
        return "(iv) empty set is not open", ()
    return None


def validate_space(carrier: Iterable[str], opens: Iterable[Iterable[str]]) -> PseudoTopology:
    carrier = tuple(carrier)
    if not carrier:
        raise ValidationError("the carrier of a pseudo-topological space must be nonempty")
    if len(set(carrier)) != len(carrier):
        raise ValidationError(f"duplicate carrier labels in {list(carrier)}")
    space = PseudoTopology(carrier, ())
    masks = []
    for o in opens:
        o = list(o)
        bad = [l for l in o if l not in space._index]
        if bad:
            raise PreconditionError(f"open {o} is not a subset of the carrier (stray {bad})")
        masks.append(space.mask(o))
    opens_m = frozenset(masks)
    v = clause_violation(space.full_mask, opens_m)
    if v is not None:
        clause, pair = v
        witness = [space.sorted_labels(m) for m in pair]
        detail = f" with witnesses {witness}" if witness else ""
        raise ValidationError(f"not a pseudo-topology: clause {clause} fails{detail}", clause, witness)
    return PseudoTopology(carrier, opens_m)


def interior(space: PseudoTopology, subset: Iterable[str]) -> frozenset[str]:
    return space.interior(subset)


def openness(space: PseudoTopology, subset: Iterable[str]) -> Openness:
    """Open means A ⊆ interior(A); closed means the complement is in Ω.

    ∅ tests as open (vacuous inclusion) even though ∅ ∉ Ω.
    """
    a = space.mask(subset)
    return Openness(space.is_open_mask(a), space.is_closed_mask(a))


def interior_law_suite(space: PseudoTopology) -> LawReport:
    """Interior laws over every subset pair of the carrier."""
    full = space.full_mask
    I = space.interior_mask
    ser = space.sorted_labels
    names = [
        "A <= B implies int A <= int B",
        "int A <= int(A | B)",
        "int A & int B <= int(A & B)",
        "A open implies int A = A",
        "int A is open or empty",
        "int A <= A",
    ]
    laws = {n: LawChecker(n) for n in names}
    for a in range(full + 1):
        w = {"A": ser(a)}
        if a in space.opens:
            laws["A open implies int A = A"].check(I(a) == a, w)
        laws["int A is open or empty"].check(I(a) == 0 or I(a) in space.opens, w)
        laws["int A <= A"].check(I(a) & ~a == 0, w)
        for b in range(full + 1):
            w = lambda: {"A": ser(a), "B": ser(b)}
            if a & ~b == 0:
                laws["A <= B implies int A <= int B"].check(I(a) & ~I(b) == 0, w)
            laws["int A <= int(A | B)"].check(I(a) & ~I(a | b) == 0, w)
            laws["int A & int B <= int(A & B)"].check(I(a) & I(b) & ~I(a & b) == 0, w)
    report = LawReport(f"interior laws on {space!r}")
    report.extend(laws[n].result() for n in names)
    return report


def default_carrier(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


def enumerate_spaces(carrier: Iterable[str] | int) -> list[PseudoTopology]:
    """All pseudo-topologies on ``carrier`` (or on ``0..n-1`` for an int).

    A candidate Ω is E together with a subset of the proper nonempty subsets,
    read as a binary counter whose bit ``m - 1`` stands for mask ``m``; the
    candidates are tried in counter order, so for two points the result is
    ``{E}``, ``{E, {0}}``, ``{E, {1}}``.
    """
    if isinstance(carrier, int):
        carrier = default_carrier(carrier)
    carrier = tuple(carrier)
    n = len(carrier)
    if n < 1:
        raise ValidationError("carrier must be nonempty")
    guard(
        n,
        MAX_CARRIER,
        f"space enumeration is limited to |E| <= {MAX_CARRIER}; |E| = {n} means {2 ** (2 ** n - 2)} candidate families",
    )
    return [PseudoTopology(carrier, opens) for opens in _space_masks(n)]


@lru_cache(maxsize=None)
def _space_masks(n: int) -> tuple[frozenset[int], ...]:
    full = (1 << n) - 1
    proper = list(range(1, full))
    out = []
    for bits in range(1 << len(proper)):
        opens = frozenset([full] + [m for i, m in enumerate(proper) if bits >> i & 1])
        if clause_violation(full, opens) is None:
            out.append(opens)
    return tuple(out)


def count_spaces(n: int) -> int:
    return len(_space_masks(n))
