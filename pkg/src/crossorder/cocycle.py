"""Value-level cocycle tables.

A CocycleTable records, for each maximal ideal M and each pair of group
elements (sigma, tau), the value w_M(sigma, tau) of the structure cocycle at
M.  The multiplication rule of the graded order forces the twisted identity

    w_M(s,t) + w_M(st,u) == w_{s^-1 M}(t,u) + w_M(s,tu)

which `validate_cocycle` checks together with normalization and
nonnegativity.  Twisting, localization, inertial restriction, and the exact
coboundary decision all live here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConsistencyError, RenormalizationError, StructureError
from .extension import ExtensionDescriptor, ExtensionFlags, ValidationReport
from .groups import FiniteGroup
from .values import ValueElem, ValueGroup

Table = tuple[tuple[tuple[ValueElem, ...], ...], ...]   # w[M][s][t]
Twist = tuple[tuple[ValueElem, ...], ...]                # c[M][s]


@dataclass(frozen=True)
class CocycleTable:
    ext: ExtensionDescriptor
    w: Table

    def __post_init__(self):
        n, r = self.ext.group.order, self.ext.ideal_count
        if len(self.w) != r or any(
                len(block) != n or any(len(row) != n for row in block)
                for block in self.w):
            raise StructureError("cocycle table must be r x |G| x |G|")

    def value(self, m: int, s: int, t: int) -> ValueElem:
        return self.w[m][s][t]

    @property
    def group(self) -> FiniteGroup:
        return self.ext.group

    @property
    def gamma_s(self) -> ValueGroup:
        return self.ext.gamma.ambient

    def unit_pair_value(self, m: int, s: int) -> ValueElem:
        """w_M(s, s^-1), the obstruction to x_s being invertible at M."""
        return self.w[m][s][self.group.inv(s)]

    def divides(self, s: int, t: int) -> bool:
        """True when x_t lies in the left module generated by x_s, read off
        as w_M(s, s^-1 t) == 0 at every ideal."""
        g = self.group
        u = g.mul(g.inv(s), t)
        return all(self.w[m][s][u].is_zero() for m in range(self.ext.ideal_count))

    def divides_at(self, m: int, s: int, t: int) -> bool:
        """Single-ideal divisibility: w_M(s, s^-1 t) == 0."""
        g = self.group
        return self.w[m][s][g.mul(g.inv(s), t)].is_zero()

    def to_json(self) -> dict:
        obj = self.ext.to_json()
        obj["cocycle"] = [
            [[e.to_json() for e in row] for row in block] for block in self.w
        ]
        return obj


def build_table(ext: ExtensionDescriptor,
                entry) -> CocycleTable:
    """Construct a table from a callable entry(m, s, t) -> ValueElem."""
    n, r = ext.group.order, ext.ideal_count
    w = tuple(
        tuple(tuple(entry(m, s, t) for t in range(n)) for s in range(n))
        for m in range(r))
    return CocycleTable(ext, w)


def validate_cocycle(ct: CocycleTable) -> ValidationReport:
    """Check shape, membership, normalization, nonnegativity, and the
    twisted cocycle identity."""
    rep = ValidationReport()
    ext, g = ct.ext, ct.group
    n, r = g.order, ext.ideal_count
    gamma_s = ext.gamma.ambient

    member = all(
        ct.w[m][s][t].group == gamma_s
        and gamma_s.contains(ct.w[m][s][t].entries)
        for m in range(r) for s in range(n) for t in range(n))
    rep.add("values-in-extension-group", member,
            "" if member else "entries must lie in the extension value group")

    nonneg = all(
        ct.w[m][s][t].is_nonnegative()
        for m in range(r) for s in range(n) for t in range(n))
    rep.add("nonnegative", nonneg,
            "" if nonneg else "cocycle values must be >= 0")

    normalized = all(
        ct.w[m][0][t].is_zero() and ct.w[m][s][0].is_zero()
        for m in range(r) for s in range(n) for t in range(n))
    rep.add("normalized", normalized,
            "" if normalized else "w(1, s) and w(s, 1) must vanish")

    bad = None
    for m in range(r):
        for s in range(n):
            sm = ext.act(g.inv(s), m)
            for t in range(n):
                st = g.mul(s, t)
                for u in range(n):
                    lhs = ct.w[m][s][t] + ct.w[m][st][u]
                    rhs = ct.w[sm][t][u] + ct.w[m][s][g.mul(t, u)]
                    if lhs != rhs:
                        bad = (m, s, t, u)
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    rep.add("twisted-identity", bad is None,
            "" if bad is None else
            f"identity fails at (M,s,t,u)={bad}")
    return rep


def unit_subgroup(ct: CocycleTable) -> frozenset[int]:
    """H = elements whose basis unit x_s is invertible in the order, i.e.
    w_M(s, s^-1) == 0 at every ideal.  Always a subgroup for valid tables."""
    g = ct.group
    h = frozenset(
        s for s in g.elements()
        if all(ct.unit_pair_value(m, s).is_zero()
               for m in range(ct.ext.ideal_count)))
    if not g.is_subgroup(h):
        raise ConsistencyError("unit elements do not form a subgroup; "
                               "the table violates the cocycle identity")
    return h


def unit_subgroup_at(ct: CocycleTable, m: int) -> frozenset[int]:
    """H_M = elements of the stabilizer of M whose basis unit is invertible
    in the localization at M."""
    gz = ct.ext.decomposition_group(m)
    return frozenset(s for s in gz if ct.unit_pair_value(m, s).is_zero())


@dataclass(frozen=True)
class GradedRadicalShadow:
    """Which graded components meet the radical: the component of s avoids
    the radical at M exactly when w_M(s, s^-1) == 0."""
    unit_elements: frozenset[int]
    strict: tuple[tuple[bool, ...], ...]   # strict[M][s]

    def component_in_radical(self, m: int, s: int) -> bool:
        return self.strict[m][s]


def graded_radical(ct: CocycleTable) -> GradedRadicalShadow:
    n, r = ct.group.order, ct.ext.ideal_count
    strict = tuple(
        tuple(not ct.unit_pair_value(m, s).is_zero() for s in range(n))
        for m in range(r))
    return GradedRadicalShadow(unit_subgroup(ct), strict)


def coboundary_twist(ct: CocycleTable, c: Twist, mode: str = "K") -> CocycleTable:
    """Twist the table by a coboundary.

    mode "S": the twisting scalars are units of S, invisible at the value
    level — returns the table unchanged.

    mode "K": the scalars are field elements with value c[M][s]; the raw
    twist may go negative, so each basis unit x_s (s != 1) is rescaled by a
    common uniformizing value t in the base group chosen minimally so that
    every entry is nonnegative again.
    """
    if mode == "S":
        return ct
    if mode != "K":
        raise StructureError(f"unknown twist mode {mode!r}")
    ext, g = ct.ext, ct.group
    n, r = g.order, ext.ideal_count
    gamma_s, gamma_v = ext.gamma.ambient, ext.gamma.sub
    if len(c) != r or any(len(row) != n for row in c):
        raise StructureError("twist must be an r x |G| array")
    for m in range(r):
        if not c[m][0].is_zero():
            raise StructureError("twist must vanish on the identity")
        for s in range(n):
            if not gamma_s.contains(c[m][s].entries):
                raise StructureError("twist values must lie in the "
                                     "extension value group")

    def mult(s: int, t: int) -> int:
        return (s != 0) + (t != 0) - (g.mul(s, t) != 0)

    raw = [[[ct.w[m][s][t] + c[m][s] + c[ext.act(g.inv(s), m)][t]
             - c[m][g.mul(s, t)]
             for t in range(n)] for s in range(n)] for m in range(r)]

    # smallest nonnegative correction per coordinate of the base group
    need = [Fraction(0)] * gamma_s.rank
    for m in range(r):
        for s in range(n):
            for t in range(n):
                k = mult(s, t)
                if k == 0:
                    if not raw[m][s][t].is_zero():
                        raise RenormalizationError(
                            "twist breaks normalization on a fixed entry")
                    continue
                for j, x in enumerate(raw[m][s][t].entries):
                    if -x / k > need[j]:
                        need[j] = -x / k
    shift = gamma_v.ceil_to(need)
    shift_s = gamma_s.element(*shift.entries)
    w = tuple(
        tuple(tuple(raw[m][s][t] + mult(s, t) * shift_s for t in range(n))
              for s in range(n))
        for m in range(r))
    return CocycleTable(ext, w)


def _subgroup_group(g: FiniteGroup, sub: frozenset[int]):
    """Reindex a subgroup as a standalone FiniteGroup; element 0 stays the
    identity.  Returns (group, parent_elements)."""
    order = sorted(sub)
    if order[0] != 0:
        raise StructureError("subgroup must contain the identity")
    index = {p: i for i, p in enumerate(order)}
    k = len(order)
    table = tuple(
        tuple(index[g.mul(order[a], order[b])] for b in range(k))
        for a in range(k))
    return FiniteGroup(table), tuple(order)


@dataclass(frozen=True)
class Localization:
    """A cocycle table restricted to the stabilizer of one ideal, together
    with the map back to the original group."""
    table: CocycleTable
    ideal: int
    parent_elements: tuple[int, ...]

    def to_parent(self, local: int) -> int:
        return self.parent_elements[local]

    def from_parent(self, parent: int) -> int:
        return self.parent_elements.index(parent)


def _restricted(ct: CocycleTable, m: int, sub: frozenset[int],
                f_res: int, inertia: frozenset[int],
                defectless: bool) -> Localization:
    ext = ct.ext
    group, order = _subgroup_group(ext.group, sub)
    index = {p: i for i, p in enumerate(order)}
    k = group.order
    flags = ExtensionFlags(
        defectless=defectless,
        residue_separable=ext.flags.residue_separable,
        residue_perfect=ext.flags.residue_perfect,
        henselian=ext.flags.henselian,
        integral_closure_fg=ext.flags.integral_closure_fg,
        local_field_finite_residue=ext.flags.local_field_finite_residue,
    )
    new_ext = ExtensionDescriptor(
        group=group,
        ideal_count=1,
        action=tuple((0,) for _ in range(k)),
        gamma=ext.gamma,
        inertia=(frozenset(index[p] for p in inertia),),
        p_bar=ext.p_bar,
        f_res=f_res,
        flags=flags,
    )
    w = (tuple(
        tuple(ct.w[m][order[a]][order[b]] for b in range(k))
        for a in range(k)),)
    return Localization(CocycleTable(new_ext, w), m, order)


def localize(ct: CocycleTable, m: int) -> Localization:
    """Restrict the table to the stabilizer of ideal m; the result is an
    indecomposed table over the same value groups."""
    ext = ct.ext
    gz = ext.decomposition_group(m)
    return _restricted(ct, m, gz,
                       f_res=ext.f_res,
                       inertia=ext.inertia[m],
                       defectless=ext.flags.defectless)


def restrict_inertial(ct: CocycleTable, m: int) -> Localization:
    """Restrict the table to the inertia group of ideal m: the totally
    ramified part, with trivial residue degree."""
    ext = ct.ext
    t = ext.inertia[m]
    if not t <= ext.decomposition_group(m):
        raise StructureError("inertia group must stabilize its ideal")
    return _restricted(ct, m, t, f_res=1, inertia=t,
                       defectless=(len(t) == ext.ramification_index()))


# --- exact coboundary decision -------------------------------------------

@dataclass(frozen=True)
class CoboundaryResult:
    is_coboundary: bool
    witness: Twist | None
    rational_witness: Twist

    def to_json(self) -> dict:
        return {
            "is_coboundary": self.is_coboundary,
            "witness": None if self.witness is None else [
                [e.to_json() for e in row] for row in self.witness],
        }


def _averaged_witness(ct: CocycleTable) -> Twist:
    """c[M][s] = (1/n) * sum_t w_M(s, t); the cocycle identity summed over
    the last argument shows this is always a rational witness."""
    g, ext = ct.group, ct.ext
    n, r = g.order, ext.ideal_count
    gamma_s = ext.gamma.ambient
    out = []
    for m in range(r):
        row = []
        for s in range(n):
            total = [Fraction(0)] * gamma_s.rank
            for t in range(n):
                for j, x in enumerate(ct.w[m][s][t].entries):
                    total[j] += x
            row.append(ValueElem(gamma_s, tuple(x / n for x in total)))
        out.append(tuple(row))
    return tuple(out)


def _solve_integer_linear(rows: list[list[int]], rhs: list[int]):
    """Solve A x = b over the integers, or return None.

    Diagonalizes A with unimodular row and column operations while carrying
    the right-hand side and the column transform."""
    m = len(rows)
    if m == 0:
        return []
    n = len(rows[0])
    a = [row[:] for row in rows]
    b = rhs[:]
    col = [[int(i == j) for j in range(n)] for i in range(n)]
    k = 0
    while k < min(m, n):
        # pick the smallest nonzero entry in the remaining block as pivot
        pivot = None
        for i in range(k, m):
            for j in range(k, n):
                if a[i][j] and (pivot is None
                                or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[k], a[pi] = a[pi], a[k]
        b[k], b[pi] = b[pi], b[k]
        for row in a:
            row[k], row[pj] = row[pj], row[k]
        col[k], col[pj] = col[pj], col[k]
        dirty = False
        for i in range(k + 1, m):
            if a[i][k]:
                q = a[i][k] // a[k][k]
                for j in range(k, n):
                    a[i][j] -= q * a[k][j]
                b[i] -= q * b[k]
                if a[i][k]:
                    dirty = True
        for j in range(k + 1, n):
            if a[k][j]:
                q = a[k][j] // a[k][k]
                for i in range(m):
                    a[i][j] -= q * a[i][k]
                for t in range(n):
                    col[j][t] -= q * col[k][t]
                if a[k][j]:
                    dirty = True
        if dirty or any(a[i][k] for i in range(k + 1, m)) \
                or any(a[k][j] for j in range(k + 1, n)):
            continue  # remainders left; repeat with a smaller pivot
        k += 1
    x = [0] * n
    for i in range(m):
        if i < k:
            if b[i] % a[i][i]:
                return None
            x[i] = b[i] // a[i][i]
        elif b[i]:
            return None
    return [sum(col[i][j] * x[i] for i in range(n)) for j in range(n)]


def is_coboundary(ct: CocycleTable) -> CoboundaryResult:
    """Decide exactly whether the table is the coboundary of a function
    c: ideals x G -> Gamma_S with c(1) = 0.

    A rational witness always exists (averaging over the group); the only
    question is whether one exists inside Gamma_S, which decouples into an
    integer linear system per non-dense coordinate."""
    g, ext = ct.group, ct.ext
    n, r = g.order, ext.ideal_count
    gamma_s = ext.gamma.ambient
    rational = _averaged_witness(ct)

    # unknowns: c[M][s] for s != 1, one scalar per coordinate
    def var(m: int, s: int) -> int:
        return m * (n - 1) + (s - 1)

    nvars = r * (n - 1)
    witness_entries = [[[None] * gamma_s.rank for _ in range(n)]
                       for _ in range(r)]
    for j, coord in enumerate(gamma_s.coords):
        if coord.kind == "Q":
            for m in range(r):
                for s in range(n):
                    witness_entries[m][s][j] = rational[m][s].entries[j]
            continue
        d = coord.denominator
        rows, rhs = [], []
        for m in range(r):
            for s in range(n):
                sm = ext.act(g.inv(s), m)
                for t in range(n):
                    row = [0] * nvars
                    if s != 0:
                        row[var(m, s)] += 1
                    if t != 0:
                        row[var(sm, t)] += 1
                    st = g.mul(s, t)
                    if st != 0:
                        row[var(m, st)] -= 1
                    target = ct.w[m][s][t].entries[j] * d
                    if target.denominator != 1:
                        raise ConsistencyError(
                            "cocycle entry outside the extension value group")
                    rows.append(row)
                    rhs.append(int(target))
        sol = _solve_integer_linear(rows, rhs)
        if sol is None:
            return CoboundaryResult(False, None, rational)
        for m in range(r):
            witness_entries[m][0][j] = Fraction(0)
            for s in range(1, n):
                witness_entries[m][s][j] = Fraction(sol[var(m, s)], d)
    witness = tuple(
        tuple(ValueElem(gamma_s, tuple(witness_entries[m][s]))
              for s in range(n))
        for m in range(r))
    return CoboundaryResult(True, witness, rational)
