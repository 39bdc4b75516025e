"""Finite groups given by explicit multiplication tables.

Element 0 is always the identity.  Tables are tiny (order <= 8 across this
package), so everything is done by exhaustive scans.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import StructureError


@dataclass(frozen=True)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.table)
        for i, row in enumerate(self.table):
            if len(row) != n or any(not 0 <= x < n for x in row):
                raise StructureError(f"multiplication table row {i} malformed")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        row = self.table[a]
        for b, ab in enumerate(row):
            if ab == 0:
                return b
        raise StructureError(f"element {a} has no inverse")

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, a: int) -> int:
        x, k = a, 1
        while x != 0:
            x = self.mul(x, a)
            k += 1
        return k

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(a), -k)
        x = 0
        for _ in range(k):
            x = self.mul(x, a)
        return x

    def check_axioms(self) -> list[str]:
        """Return a list of axiom violations (empty means a valid group)."""
        bad = []
        n = self.order
        for a in range(n):
            if self.table[0][a] != a or self.table[a][0] != a:
                bad.append(f"identity law fails at {a}")
        for a in range(n):
            if not any(self.table[a][b] == 0 for b in range(n)):
                bad.append(f"no inverse for {a}")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                        bad.append(f"associativity fails at ({a},{b},{c})")
                        return bad
        return bad

    def closure(self, gens) -> frozenset[int]:
        els = {0} | set(gens)
        frontier = list(els)
        while frontier:
            nxt = []
            for a in frontier:
                for b in list(els):
                    for c in (self.mul(a, b), self.mul(b, a), self.inv(a)):
                        if c not in els:
                            els.add(c)
                            nxt.append(c)
            frontier = nxt
        return frozenset(els)

    def is_subgroup(self, subset) -> bool:
        s = frozenset(subset)
        if 0 not in s:
            return False
        return all(self.mul(a, b) in s and self.inv(a) in s
                   for a in s for b in s)

    def is_normal_in(self, subset, ambient) -> bool:
        s, amb = frozenset(subset), frozenset(ambient)
        return all(self.mul(self.mul(g, h), self.inv(g)) in s
                   for g in amb for h in s)

    def subgroups(self) -> list[frozenset[int]]:
        """All subgroups, smallest first (deterministic order)."""
        found = {frozenset({0}), frozenset(self.elements())}
        import itertools
        els = [e for e in self.elements() if e != 0]
        for k in (1, 2, 3):
            for gens in itertools.combinations(els, k):
                found.add(self.closure(gens))
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def is_abelian(self) -> bool:
        return all(self.mul(a, b) == self.mul(b, a)
                   for a in self.elements() for b in self.elements())

    def is_cyclic(self) -> bool:
        return self.generator() is not None

    def generator(self) -> int | None:
        for a in self.elements():
            if len(self.closure([a])) == self.order:
                return a
        return None

    def left_cosets(self, subgroup) -> list[frozenset[int]]:
        """Left cosets g*S, ordered by smallest member."""
        s = frozenset(subgroup)
        seen, cosets = set(), []
        for g in self.elements():
            if g in seen:
                continue
            coset = frozenset(self.mul(g, h) for h in s)
            seen |= coset
            cosets.append(coset)
        return cosets

    def right_cosets(self, subgroup) -> list[frozenset[int]]:
        """Right cosets S*g, ordered by smallest member."""
        s = frozenset(subgroup)
        seen, cosets = set(), []
        for g in self.elements():
            if g in seen:
                continue
            coset = frozenset(self.mul(h, g) for h in s)
            seen |= coset
            cosets.append(coset)
        return cosets

    def conjugate_subgroup(self, subset, g: int) -> frozenset[int]:
        gi = self.inv(g)
        return frozenset(self.mul(self.mul(g, h), gi) for h in subset)

    def to_json(self) -> dict:
        return {"order": self.order, "table": [list(r) for r in self.table]}

    @staticmethod
    def from_json(obj: dict) -> "FiniteGroup":
        g = FiniteGroup(tuple(tuple(r) for r in obj["table"]))
        if g.order != obj.get("order", g.order):
            raise StructureError("group order field disagrees with table size")
        return g


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Direct product with pairs ordered (g-index, h-index), identity first."""
    pairs = [(a, b) for a in g.elements() for b in h.elements()]
    index = {p: i for i, p in enumerate(pairs)}
    table = tuple(
        tuple(index[(g.mul(a1, a2), h.mul(b1, b2))] for (a2, b2) in pairs)
        for (a1, b1) in pairs)
    return FiniteGroup(table)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: elements r^i and r^i s, s r s = r^-1."""
    # index i in [0,n): rotation r^i; index n+i: reflection r^i s
    def mul(x, y):
        xi, xs = (x % n, x >= n)
        yi, ys = (y % n, y >= n)
        if not xs:
            i = (xi + yi) % n
        else:
            i = (xi - yi) % n
        s = xs != ys
        return i + (n if s else 0)

    order = 2 * n
    return FiniteGroup(tuple(tuple(mul(x, y) for y in range(order))
                             for x in range(order)))


@lru_cache(maxsize=None)
def standard_groups(max_order: int) -> tuple[tuple[str, FiniteGroup], ...]:
    """A deterministic menu of small groups up to the given order."""
    menu: list[tuple[str, FiniteGroup]] = []
    for n in range(1, max_order + 1):
        menu.append((f"C{n}", cyclic(n)))
    if max_order >= 4:
        menu.append(("C2xC2", direct_product(cyclic(2), cyclic(2))))
    if max_order >= 6:
        menu.append(("S3", dihedral(3)))
    if max_order >= 8:
        menu.append(("C2xC4", direct_product(cyclic(2), cyclic(4))))
        menu.append(("C2xC2xC2",
                     direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2)))))
        menu.append(("D4", dihedral(4)))
    return tuple(menu)
