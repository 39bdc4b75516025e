"""Instance construction.

Everything here is constructive: start from an inflation of the classical
cyclic-algebra cocycle along a cyclic quotient of the group (or from the
zero table), then apply coboundary twists.  The cocycle identity is a
stringent constraint, so rejection sampling over raw tables is hopeless;
the constructive route guarantees validity and still reaches every twist
class obtainable from cyclic inflations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .cocycle import CocycleTable, build_table, coboundary_twist, \
    validate_cocycle
from .errors import StructureError
from .extension import ExtensionDescriptor, ExtensionFlags, validate_extension
from .graphs import graph_mod_ideal
from .groups import FiniteGroup, cyclic, standard_groups
from .values import Coord, SubgroupEmbedding, ValueElem, ValueGroup


# --- fixed examples ---------------------------------------------------------

def example_rank2() -> tuple[ExtensionDescriptor, CocycleTable]:
    """C2 over an indecomposed rank-2 base: value groups Z x Z inside
    (1/2)Z x Z (lex, most significant first), totally ramified, tame, with
    the single nontrivial cocycle value w(s, s) = (0, 1)."""
    gv = ValueGroup((Coord("Z"), Coord("Z")))
    gs = ValueGroup((Coord("Zscaled", 2), Coord("Z")))
    g = cyclic(2)
    ext = ExtensionDescriptor(
        group=g, ideal_count=1, action=((0,), (0,)),
        gamma=SubgroupEmbedding(ambient=gs, sub=gv),
        inertia=(frozenset({0, 1}),), p_bar=1, f_res=1,
        flags=ExtensionFlags(
            defectless=True, residue_separable=True, residue_perfect=True,
            henselian=False, integral_closure_fg=False,
            local_field_finite_residue=False))

    def entry(m, s, t):
        return gs.element(Fraction(0), Fraction(1)) if s == t == 1 \
            else gs.zero()

    return ext, build_table(ext, entry)


def dvr_descriptor(n: int) -> ExtensionDescriptor:
    """Tame, totally ramified, indecomposed descriptor for C_n over a
    rank-one discrete base: Z inside (1/n)Z."""
    gv = ValueGroup((Coord("Z"),))
    gs = ValueGroup((Coord("Zscaled", n) if n > 1 else Coord("Z"),))
    g = cyclic(n)
    return ExtensionDescriptor(
        group=g, ideal_count=1, action=tuple((0,) for _ in range(n)),
        gamma=SubgroupEmbedding(ambient=gs, sub=gv),
        inertia=(frozenset(range(n)),), p_bar=1, f_res=1,
        flags=ExtensionFlags(
            defectless=True, residue_separable=True, residue_perfect=True,
            henselian=False, integral_closure_fg=False,
            local_field_finite_residue=False))


def cyclic_template(n: int, gamma: ValueElem,
                    ext: ExtensionDescriptor | None = None) -> CocycleTable:
    """The classical cyclic-algebra table on C_n: w(s^i, s^j) = 0 when
    i + j < n and gamma otherwise (exponents reduced into [0, n))."""
    if ext is None:
        ext = dvr_descriptor(n)
    g = ext.group
    if g.order != n:
        raise StructureError("descriptor group order must match n")
    sigma = g.generator()
    if sigma is None:
        raise StructureError("descriptor group must be cyclic")
    if not gamma.is_nonnegative():
        raise StructureError("gamma must be nonnegative")
    exp = {}
    x = 0
    for i in range(n):
        exp[x] = i
        x = g.mul(x, sigma)
    zero = ext.gamma.ambient.zero()

    def entry(m, s, t):
        return gamma if exp[s] + exp[t] >= n else zero

    ct = build_table(ext, entry)
    rep = validate_cocycle(ct)
    if not rep.ok:
        raise StructureError(f"template failed validation: {rep.failures()}")
    return ct


# --- random instances --------------------------------------------------------

@dataclass(frozen=True)
class ForgeParams:
    max_group_order: int = 8
    max_ideals: int = 4
    max_twists: int = 2
    allow_dense: bool = True


def _cyclic_quotients(g: FiniteGroup):
    """All normal subgroups K with G/K cyclic and nontrivial, as
    (K, exponent map G -> [0, q), q)."""
    out = []
    for k in g.subgroups():
        if len(k) == g.order:
            continue
        if not g.is_normal_in(k, g.elements()):
            continue
        cosets = g.left_cosets(k)
        reps = [min(c) for c in cosets]
        q = len(cosets)
        coset_of = {}
        for ci, c in enumerate(cosets):
            for x in c:
                coset_of[x] = ci
        table = tuple(
            tuple(coset_of[g.mul(reps[a], reps[b])] for b in range(q))
            for a in range(q))
        qg = FiniteGroup(table)
        gen = qg.generator()
        if gen is None:
            continue
        exp = {}
        x = 0
        for i in range(q):
            exp[x] = i
            x = qg.mul(x, gen)
        out.append((frozenset(k),
                    tuple(exp[coset_of[s]] for s in g.elements()), q))
    return out


def _gamma_menu(e: int, rng: random.Random, allow_dense: bool):
    """Pick compatible value groups with subgroup index e; returns the
    embedding plus a list of candidate nonzero table values."""
    choices = ["rank1", "rank2-low", "rank2-high"]
    if allow_dense and e == 1:
        choices.append("dense")
    kind = rng.choice(choices)
    scaled = Coord("Zscaled", e) if e > 1 else Coord("Z")
    if kind == "rank1":
        gv = ValueGroup((Coord("Z"),))
        gs = ValueGroup((scaled,))
        vals = [gs.element(Fraction(1, e)), gs.element(Fraction(2, e)),
                gs.element(Fraction(1))]
    elif kind == "rank2-low":
        gv = ValueGroup((Coord("Z"), Coord("Z")))
        gs = ValueGroup((Coord("Z"), scaled))
        vals = [gs.element(Fraction(0), Fraction(1, e)),
                gs.element(Fraction(0), Fraction(2, e)),
                gs.element(Fraction(1), Fraction(0))]
    elif kind == "rank2-high":
        gv = ValueGroup((Coord("Z"), Coord("Z")))
        gs = ValueGroup((scaled, Coord("Z")))
        vals = [gs.element(Fraction(0), Fraction(1)),
                gs.element(Fraction(0), Fraction(2)),
                gs.element(Fraction(1, e), Fraction(0))]
    else:
        gv = ValueGroup((Coord("Q"),))
        gs = ValueGroup((Coord("Q"),))
        vals = [gs.element(Fraction(1, 2)), gs.element(Fraction(1)),
                gs.element(Fraction(3, 2))]
    return SubgroupEmbedding(ambient=gs, sub=gv), vals


def _random_twist(ct: CocycleTable, rng: random.Random) -> CocycleTable:
    ext = ct.ext
    gs = ext.gamma.ambient
    n, r = ext.group.order, ext.ideal_count
    def pick(coord) -> Fraction:
        lp = coord.least_positive()
        step = lp if lp is not None else Fraction(1, 2)
        val = rng.choice([Fraction(0), Fraction(0), step, 2 * step])
        return val if coord.contains(val) else Fraction(0)

    c = []
    for _ in range(r):
        row = [gs.zero()]
        for _ in range(1, n):
            row.append(ValueElem(gs, tuple(pick(co) for co in gs.coords)))
        c.append(tuple(row))
    return coboundary_twist(ct, tuple(c), mode="K")


def random_instance(
        seed: int, params: ForgeParams = ForgeParams()
) -> tuple[ExtensionDescriptor, CocycleTable]:
    """Deterministic random instance: a group with a transitive action on
    the cosets of a chosen stabilizer, a conjugation-compatible family of
    inertia groups, a compatible pair of value groups, an inflated cyclic
    template (or the zero table), and a few coboundary twists."""
    rng = random.Random(f"crossorder:{seed}")
    menu = [grp for _, grp in standard_groups(params.max_group_order)]
    g = rng.choice(menu)
    n = g.order

    subs = g.subgroups()
    bs = [b for b in subs if n // len(b) <= params.max_ideals]
    b = rng.choice(bs)
    r = n // len(b)
    ns = [m for m in subs if m <= b and g.is_normal_in(m, b)]
    inertia0 = rng.choice(ns)
    e = len(inertia0)
    f_res = len(b) // e

    cosets = g.left_cosets(b)
    reps = [min(c) for c in cosets]
    coset_of = {}
    for ci, c in enumerate(cosets):
        for x in c:
            coset_of[x] = ci
    action = tuple(
        tuple(coset_of[g.mul(s, reps[m])] for m in range(r))
        for s in g.elements())
    inertia = tuple(
        frozenset(g.mul(g.mul(reps[m], t), g.inv(reps[m]))
                  for t in inertia0)
        for m in range(r))

    gamma, vals = _gamma_menu(e, rng, params.allow_dense)

    trivial = rng.random() < 0.25
    flags = ExtensionFlags(
        defectless=True,
        residue_separable=True,
        residue_perfect=rng.random() < 0.9,
        henselian=(r == 1 and rng.random() < 0.3),
        integral_closure_fg=trivial and rng.random() < 0.5,
        local_field_finite_residue=False)
    ext = ExtensionDescriptor(
        group=g, ideal_count=r, action=action, gamma=gamma,
        inertia=inertia, p_bar=1, f_res=f_res, flags=flags)
    rep = validate_extension(ext)
    if not rep.ok:
        raise StructureError(f"forged descriptor invalid: {rep.failures()}")

    zero = gamma.ambient.zero()
    quots = _cyclic_quotients(g)
    if trivial or not quots:
        ct = build_table(ext, lambda m, s, t: zero)
    else:
        _, exp, q = rng.choice(quots)
        gamma_val = rng.choice(vals)
        ct = build_table(
            ext,
            lambda m, s, t: gamma_val if exp[s] + exp[t] >= q else zero)
    for _ in range(rng.randint(0, params.max_twists)):
        ct = _random_twist(ct, rng)

    rep = validate_cocycle(ct)
    if not rep.ok:
        raise StructureError(f"forged table invalid: {rep.failures()}")
    return ext, ct


# --- counterexample search ---------------------------------------------------

@dataclass
class SearchReport:
    """Outcome of hunting for a semihereditary table whose per-ideal graph
    fails to be a chain."""
    examined: int = 0
    semihereditary_yes: int = 0
    hits: list = dc_field(default_factory=list)
    per_branch: dict = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "examined": self.examined,
            "semihereditary_yes": self.semihereditary_yes,
            "hits": self.hits,
            "per_branch": dict(sorted(self.per_branch.items())),
        }


def counterexample_search(budget: int, seed: int = 0,
                          params: ForgeParams = ForgeParams()) -> SearchReport:
    """Generate `budget` instances, keep those decidably semihereditary,
    and test every per-ideal divisibility graph for chain-ness.  A hit
    would have to come from a wild or non-defectless extension, where the
    semihereditary verdict is not decidable here, so the expected hit list
    is empty."""
    from .decisions import Verdict, classify
    report = SearchReport()
    for i in range(budget):
        ext, ct = random_instance(seed + i, params)
        res = classify(ct)
        report.examined += 1
        rule = res.semihereditary.rule
        report.per_branch[rule] = report.per_branch.get(rule, 0) + 1
        if res.semihereditary.verdict != Verdict.YES:
            continue
        report.semihereditary_yes += 1
        for m in range(ext.ideal_count):
            if not graph_mod_ideal(ct, m).is_chain():
                report.hits.append({"seed": seed + i, "ideal": m})
    return report
