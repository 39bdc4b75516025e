"""Exact arithmetic for totally ordered abelian groups of finite rank.

Groups are finite lexicographic products of rank-1 groups, each coordinate
one of: the integers Z, the dense rationals Q, or a scaled integer group
(1/d)Z.  The first coordinate is the most significant.  All entries are
exact `Fraction`s, so order comparisons never involve tolerances.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import DomainError, HypothesisError, StructureError

KIND_Z = "Z"
KIND_Q = "Q"
KIND_ZSCALED = "Zscaled"

_KINDS = (KIND_Z, KIND_Q, KIND_ZSCALED)


@dataclass(frozen=True)
class Coord:
    """One lexicographic coordinate: Z, Q, or (1/d)Z."""

    kind: str
    d: int = 1

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise StructureError(f"unknown coordinate kind {self.kind!r}")
        if self.d < 1:
            raise StructureError(f"scaled-integer denominator must be >= 1, got {self.d}")
        if self.kind != KIND_ZSCALED and self.d != 1:
            raise StructureError(f"denominator only meaningful for {KIND_ZSCALED}")

    @property
    def denominator(self) -> int:
        """Denominator of the coordinate lattice; 1 for Z, d for (1/d)Z."""
        return self.d if self.kind == KIND_ZSCALED else 1

    def contains(self, q: Fraction) -> bool:
        if self.kind == KIND_Q:
            return True
        return (q * self.denominator).denominator == 1

    def least_positive(self) -> Optional[Fraction]:
        if self.kind == KIND_Q:
            return None
        return Fraction(1, self.denominator)

    def ceil_to(self, q: Fraction) -> Fraction:
        """Smallest coordinate-group element >= q."""
        if self.kind == KIND_Q:
            return q
        d = self.denominator
        return Fraction(math.ceil(q * d), d)

    def to_json(self) -> dict:
        if self.kind == KIND_ZSCALED:
            return {"kind": self.kind, "d": self.d}
        return {"kind": self.kind}

    @staticmethod
    def from_json(obj: dict) -> "Coord":
        return Coord(obj["kind"], obj.get("d", 1))


@dataclass(frozen=True)
class ValueGroup:
    """A lexicographic product of rank-1 coordinates, most significant first.

    The empty product (rank 0) is the trivial group; it arises by coarsening
    a rank-1 group and supports only the zero element.
    """

    coords: tuple[Coord, ...]

    @property
    def rank(self) -> int:
        return len(self.coords)

    def zero(self) -> "ValueElem":
        return ValueElem(self, (Fraction(0),) * self.rank)

    def element(self, *entries) -> "ValueElem":
        fracs = tuple(Fraction(e) for e in entries)
        if len(fracs) != self.rank:
            raise StructureError(
                f"expected {self.rank} entries, got {len(fracs)}")
        for i, (c, q) in enumerate(zip(self.coords, fracs)):
            if not c.contains(q):
                raise StructureError(
                    f"entry {q} not in coordinate {i} ({c.kind}, d={c.d})")
        return ValueElem(self, fracs)

    def contains(self, entries: Iterable[Fraction]) -> bool:
        entries = tuple(entries)
        return len(entries) == self.rank and all(
            c.contains(q) for c, q in zip(self.coords, entries))

    def least_positive(self) -> Optional["ValueElem"]:
        """Minimum positive element, or None when the group is dense (the
        least significant coordinate is Q) or trivial."""
        if self.rank == 0:
            return None
        lp = self.coords[-1].least_positive()
        if lp is None:
            return None
        entries = [Fraction(0)] * self.rank
        entries[-1] = lp
        return ValueElem(self, tuple(entries))

    def coarsen(self) -> "ValueGroup":
        """Collapse the least convex subgroup: drop the last coordinate."""
        if self.rank == 0:
            raise StructureError("cannot coarsen the trivial group")
        return ValueGroup(self.coords[:-1])

    def ceil_to(self, entries: Iterable[Fraction]) -> "ValueElem":
        """Coordinatewise round-up of a rational vector into this group."""
        entries = tuple(entries)
        if len(entries) != self.rank:
            raise StructureError("rank mismatch in ceil_to")
        return ValueElem(
            self, tuple(c.ceil_to(q) for c, q in zip(self.coords, entries)))

    def to_json(self) -> dict:
        return {"coords": [c.to_json() for c in self.coords]}

    @staticmethod
    def from_json(obj: dict) -> "ValueGroup":
        return ValueGroup(tuple(Coord.from_json(c) for c in obj["coords"]))


@dataclass(frozen=True, order=False)
class ValueElem:
    """An element of a ValueGroup, compared lexicographically."""

    group: ValueGroup
    entries: tuple[Fraction, ...]

    def _check_same_group(self, other: "ValueElem") -> None:
        if not isinstance(other, ValueElem):
            raise StructureError(f"cannot compare ValueElem with {type(other)}")
        if self.group != other.group:
            raise StructureError("value elements from different groups")

    def __add__(self, other: "ValueElem") -> "ValueElem":
        self._check_same_group(other)
        return ValueElem(self.group,
                         tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "ValueElem") -> "ValueElem":
        self._check_same_group(other)
        return ValueElem(self.group,
                         tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "ValueElem":
        return ValueElem(self.group, tuple(-a for a in self.entries))

    def __mul__(self, n: int) -> "ValueElem":
        return ValueElem(self.group, tuple(a * n for a in self.entries))

    __rmul__ = __mul__

    def __lt__(self, other):
        self._check_same_group(other)
        return self.entries < other.entries

    def __le__(self, other):
        self._check_same_group(other)
        return self.entries <= other.entries

    def __gt__(self, other):
        self._check_same_group(other)
        return self.entries > other.entries

    def __ge__(self, other):
        self._check_same_group(other)
        return self.entries >= other.entries

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def is_nonnegative(self) -> bool:
        return self.entries >= (Fraction(0),) * len(self.entries)

    def to_json(self) -> list[str]:
        return [str(a) for a in self.entries]

    @staticmethod
    def from_json(group: ValueGroup, obj: list) -> "ValueElem":
        return group.element(*(Fraction(s) for s in obj))

    def __repr__(self):
        return "(" + ", ".join(str(a) for a in self.entries) + ")"


LESS, EQUAL, GREATER = -1, 0, 1


def compare(a: ValueElem, b: ValueElem) -> int:
    """Lexicographic comparison: -1 (less), 0 (equal), +1 (greater)."""
    a._check_same_group(b)
    if a.entries < b.entries:
        return LESS
    if a.entries == b.entries:
        return EQUAL
    return GREATER


@dataclass(frozen=True)
class SubgroupEmbedding:
    """A coordinatewise finite-index inclusion sub <= ambient.

    Coordinate i of `sub` must be a subgroup of coordinate i of `ambient`;
    the total index is the product of the coordinatewise indices.
    """

    ambient: ValueGroup
    sub: ValueGroup

    def __post_init__(self):
        if self.ambient.rank != self.sub.rank:
            raise StructureError("embedding requires equal ranks")
        for i, (a, s) in enumerate(zip(self.ambient.coords, self.sub.coords)):
            if not self._coord_is_subgroup(a, s):
                raise StructureError(
                    f"coordinate {i}: {s.kind}(d={s.d}) is not a subgroup "
                    f"of {a.kind}(d={a.d})")

    @staticmethod
    def _coord_is_subgroup(ambient: Coord, sub: Coord) -> bool:
        if ambient.kind == KIND_Q:
            return True
        if sub.kind == KIND_Q:
            return False
        return ambient.denominator % sub.denominator == 0

    def coord_index(self, i: int) -> int:
        """Index of the i-th sub coordinate in the i-th ambient coordinate."""
        a, s = self.ambient.coords[i], self.sub.coords[i]
        if a.kind == KIND_Q:
            if s.kind == KIND_Q:
                return 1
            raise DomainError(f"coordinate {i}: lattice in Q has infinite index")
        return a.denominator // s.denominator

    def lift(self, elem: ValueElem) -> ValueElem:
        """View a sub-group element inside the ambient group."""
        if elem.group != self.sub:
            raise StructureError("element not in the subgroup")
        return ValueElem(self.ambient, elem.entries)


def subgroup_index(emb: SubgroupEmbedding) -> int:
    """Total index [ambient : sub]; raises DomainError when infinite."""
    idx = 1
    for i in range(emb.ambient.rank):
        idx *= emb.coord_index(i)
    return idx


def coset_representatives(emb: SubgroupEmbedding) -> list[tuple[Fraction, ...]]:
    """One representative per coset of sub in ambient (finite index only)."""
    per_coord = []
    for i in range(emb.ambient.rank):
        m = emb.coord_index(i)
        da = emb.ambient.coords[i].denominator
        per_coord.append([Fraction(j, da) for j in range(m)])
    return [tuple(t) for t in itertools.product(*per_coord)]


def inertial_index(emb: SubgroupEmbedding, pi_v: ValueElem) -> int:
    """Number of cosets of sub in ambient with a representative in [0, pi_v).

    `pi_v` must be the least positive element of the subgroup.  A coset has a
    representative in the box exactly when all coordinates above the least
    significant one can be cancelled inside the subgroup; the last coordinate
    then reduces into [0, pi_v) modulo the subgroup's bottom lattice.
    """
    lp = emb.sub.least_positive()
    if lp is None or pi_v != lp:
        raise HypothesisError("pi_v is not the least positive element of the subgroup")
    subgroup_index(emb)  # raises DomainError when infinite
    count = 0
    for rep in coset_representatives(emb):
        if all(emb.sub.coords[i].contains(rep[i])
               for i in range(emb.sub.rank - 1)):
            count += 1
    return count
