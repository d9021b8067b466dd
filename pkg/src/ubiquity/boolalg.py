"""Finite (powerset) Boolean algebras.

Every finite Boolean algebra is isomorphic to the powerset of its atoms, so
an algebra here is just an ordered tuple of atom labels and an element is a
bit mask over those atoms.  Bit ``i`` of a mask stands for ``labels[i]``.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator

from .errors import DomainMismatchError, ValidationError
from .report import LawChecker, LawReport


class FiniteBooleanAlgebra:
    """The Boolean algebra of all subsets of a finite, labelled atom set."""

    __slots__ = ("labels", "_index", "_hash")

    def __init__(self, labels: Iterable[str]):
        labels = tuple(labels)
        if not labels:
            raise ValidationError("a Boolean algebra needs at least one atom")
        if any(not isinstance(l, str) for l in labels):
            raise ValidationError("atom labels must be strings")
        if len(set(labels)) != len(labels):
            dup = next(l for l in labels if labels.count(l) > 1)
            raise ValidationError(f"duplicate atom label {dup!r}", witness=dup)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", {l: i for i, l in enumerate(labels)})
        object.__setattr__(self, "_hash", hash(labels))

    def __setattr__(self, name, value):
        raise AttributeError("FiniteBooleanAlgebra is immutable")

    def __eq__(self, other):
        return self is other or (
            isinstance(other, FiniteBooleanAlgebra) and self.labels == other.labels
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteBooleanAlgebra({list(self.labels)!r})"

    @property
    def atom_count(self) -> int:
        return len(self.labels)

    @property
    def size(self) -> int:
        return 1 << len(self.labels)

    @property
    def top_mask(self) -> int:
        return self.size - 1

    @property
    def zero(self) -> Element:
        return Element(self, 0)

    @property
    def one(self) -> Element:
        return Element(self, self.top_mask)

    def __len__(self):
        return self.size

    def __iter__(self) -> Iterator[Element]:
        return self.elements()

    def elements(self) -> Iterator[Element]:
        """All elements in mask order (0 first, 1 last)."""
        for m in range(self.size):
            yield Element(self, m)

    def atoms(self) -> list[Element]:
        return [Element(self, 1 << i) for i in range(self.atom_count)]

    def from_mask(self, mask: int) -> Element:
        if not 0 <= mask <= self.top_mask:
            raise ValidationError(f"mask {mask} out of range for {self!r}")
        return Element(self, mask)

    def element(self, labels: Iterable[str]) -> Element:
        """The element (subset) made of the given atom labels."""
        mask = 0
        for l in labels:
            try:
                mask |= 1 << self._index[l]
            except KeyError:
                raise ValidationError(f"unknown atom label {l!r}", witness=l) from None
        return Element(self, mask)

    def labels_of(self, mask: int) -> list[str]:
        return [l for i, l in enumerate(self.labels) if mask >> i & 1]

    def serialize(self, element: Element | int) -> list[str]:
        """Serialize as the list of atom labels in atom order; 0 is ``[]``."""
        mask = element if isinstance(element, int) else self._own(element).mask
        return self.labels_of(mask)

    def deserialize(self, data: Iterable[str]) -> Element:
        return self.element(data)

    def complement_mask(self, mask: int) -> int:
        return self.top_mask ^ mask

    def _own(self, element: Element) -> Element:
        if element.algebra != self:
            raise DomainMismatchError(f"{element!r} does not belong to {self!r}")
        return element


def powerset_algebra(atom_labels: Iterable[str]) -> FiniteBooleanAlgebra:
    return FiniteBooleanAlgebra(atom_labels)


def standard_algebra(atom_count: int) -> FiniteBooleanAlgebra:
    """P({a, b, c, ...}) with ``atom_count`` atoms labelled from ``a``."""
    if atom_count < 1:
        raise ValidationError("atom_count must be positive")
    return FiniteBooleanAlgebra(default_labels(atom_count))


def default_labels(n: int) -> list[str]:
    if n <= 26:
        return [chr(ord("a") + i) for i in range(n)]
    return [f"a{i}" for i in range(n)]


class Element:
    """A subset of the atom set of ``algebra``; compared by value."""

    __slots__ = ("algebra", "mask")

    def __init__(self, algebra: FiniteBooleanAlgebra, mask: int):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.mask == other.mask and self.algebra == other.algebra

    def __hash__(self):
        return hash((self.algebra._hash, self.mask))

    def __repr__(self):
        return "{" + ",".join(self.algebra.labels_of(self.mask)) + "}"

    def _peer(self, other: Element) -> int:
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.algebra != self.algebra:
            raise DomainMismatchError(f"{self!r} and {other!r} belong to different algebras")
        return other.mask

    def __and__(self, other: Element) -> Element:
        return Element(self.algebra, self.mask & self._peer(other))

    def __or__(self, other: Element) -> Element:
        return Element(self.algebra, self.mask | self._peer(other))

    def __invert__(self) -> Element:
        return Element(self.algebra, self.algebra.top_mask ^ self.mask)

    def __sub__(self, other: Element) -> Element:
        return Element(self.algebra, self.mask & ~self._peer(other))

    def __xor__(self, other: Element) -> Element:
        return Element(self.algebra, self.mask ^ self._peer(other))

    def __le__(self, other: Element) -> bool:
        return self.mask & ~self._peer(other) == 0

    def __ge__(self, other: Element) -> bool:
        return other.__le__(self)

    def __lt__(self, other: Element) -> bool:
        return self <= other and self.mask != other.mask

    def __gt__(self, other: Element) -> bool:
        return other < self

    def meet(self, other: Element) -> Element:
        return self & other

    def join(self, other: Element) -> Element:
        return self | other

    def complement(self) -> Element:
        return ~self

    def minus(self, other: Element) -> Element:
        return self - other

    def symdiff(self, other: Element) -> Element:
        return self ^ other

    def leq(self, other: Element) -> bool:
        return self <= other

    @property
    def is_zero(self) -> bool:
        return self.mask == 0

    @property
    def is_one(self) -> bool:
        return self.mask == self.algebra.top_mask

    def labels(self) -> list[str]:
        return self.algebra.labels_of(self.mask)


BOOLEAN_OPS = ("meet", "join", "complement", "minus", "symdiff", "leq")


def apply_boolean(op_kind: str, a: Element, b: Element | None = None):
    """Apply a named Boolean operation; ``leq`` returns a bool."""
    if op_kind not in BOOLEAN_OPS:
        raise ValidationError(f"unknown operation {op_kind!r}; expected one of {BOOLEAN_OPS}")
    if op_kind == "complement":
        if b is not None:
            raise ValidationError("complement takes a single operand")
        return ~a
    if b is None:
        raise ValidationError(f"{op_kind} needs two operands")
    return getattr(a, op_kind)(b)


def check_boolean_axioms(algebra: FiniteBooleanAlgebra) -> LawReport:
    """Exhaustively verify the Boolean-algebra axioms through the Element API.

    The sweep covers all triples, so it is meant for at most four atoms.
    """
    elems = list(algebra.elements())
    zero, one = algebra.zero, algebra.one
    names = (
        "meet commutative",
        "join commutative",
        "meet associative",
        "join associative",
        "meet absorbs join",
        "join absorbs meet",
        "meet distributes over join",
        "join distributes over meet",
        "complement meet is 0",
        "complement join is 1",
        "symdiff separates",
        "minus and symdiff definitions",
    )
    laws = {name: LawChecker(name) for name in names}
    ser = algebra.serialize
    for p, q in product(elems, repeat=2):
        w = lambda: {"p": ser(p), "q": ser(q)}
        laws["meet commutative"].check(p & q == q & p, w)
        laws["join commutative"].check(p | q == q | p, w)
        laws["meet absorbs join"].check(p & (p | q) == p, w)
        laws["join absorbs meet"].check(p | (p & q) == p, w)
        laws["symdiff separates"].check(((p ^ q) == zero) == (p == q), w)
        laws["minus and symdiff definitions"].check(
            p - q == p & ~q and p ^ q == (p - q) | (q - p), w
        )
    for p in elems:
        w = {"p": ser(p)}
        laws["complement meet is 0"].check(p & ~p == zero, w)
        laws["complement join is 1"].check(p | ~p == one, w)
    for p, q, r in product(elems, repeat=3):
        w = lambda: {"p": ser(p), "q": ser(q), "r": ser(r)}
        laws["meet associative"].check((p & q) & r == p & (q & r), w)
        laws["join associative"].check((p | q) | r == p | (q | r), w)
        laws["meet distributes over join"].check(p & (q | r) == (p & q) | (p & r), w)
        laws["join distributes over meet"].check(p | (q & r) == (p | q) & (p | r), w)
    report = LawReport(f"Boolean algebra axioms on {algebra.atom_count} atoms")
    report.extend(c.result() for c in laws.values())
    return report
