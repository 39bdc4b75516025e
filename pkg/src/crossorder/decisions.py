"""Decision procedures for ring-theoretic properties of the graded order.

Each property (semihereditary, maximal, extremal, primary, Dubrovin
valuation ring, invariant valuation ring, Azumaya) gets a three-valued
verdict with the rule that produced it and the facts it used.  Rules only
fire when their hypotheses hold, so a verdict of yes/no is always backed by
a criterion that is decidable from the value-level data; everything else is
reported as unknown rather than guessed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .cocycle import CocycleTable, is_coboundary, unit_subgroup, unit_subgroup_at
from .errors import HypothesisError
from .graphs import graph_mod_ideal, graph_of_table, nice_coset_reps
from .residue import ExactField, is_primary, twisted_group_algebra, \
    xn_minus_a_irreducible


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class VerdictEntry:
    verdict: Verdict
    rule: str
    justification: str

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "rule": self.rule,
            "justification": self.justification,
        }


def _yes(rule: str, why: str) -> VerdictEntry:
    return VerdictEntry(Verdict.YES, rule, why)


def _no(rule: str, why: str) -> VerdictEntry:
    return VerdictEntry(Verdict.NO, rule, why)


def _unknown(rule: str, why: str) -> VerdictEntry:
    return VerdictEntry(Verdict.UNKNOWN, rule, why)


def _iff(cond: bool, rule: str, why_yes: str, why_no: str) -> VerdictEntry:
    return _yes(rule, why_yes) if cond else _no(rule, why_no)


@dataclass(frozen=True)
class ResidueData:
    """Residue-field values of the cocycle on unit entries: a scalar table
    over Q or F_p indexed like the group multiplication table."""
    field: ExactField
    cocycle: tuple[tuple[object, ...], ...]

    def to_json(self) -> dict:
        obj = self.field.to_json()
        obj["cocycle"] = [[str(x) for x in row] for row in self.cocycle]
        return obj


@dataclass(frozen=True)
class SquareFreeReport:
    """Per-entry test that each cocycle value stays below twice the least
    positive value of the extension group (below the square of any maximal
    ideal); when the value group is dense the test degenerates to 'the entry
    is a unit'."""
    entries: tuple[tuple[tuple[bool, ...], ...], ...]
    all_true: bool
    failures: tuple[tuple[int, int, int], ...]

    def to_json(self) -> dict:
        return {
            "all_true": self.all_true,
            "entries": [[list(row) for row in block]
                        for block in self.entries],
            "failures": [list(t) for t in self.failures],
        }


def square_free_check(ct: CocycleTable) -> SquareFreeReport:
    ext = ct.ext
    n, r = ct.group.order, ext.ideal_count
    delta = ext.gamma.ambient.least_positive()
    out, bad = [], []
    for m in range(r):
        block = []
        for s in range(n):
            row = []
            for t in range(n):
                w = ct.w[m][s][t]
                ok = w < 2 * delta if delta is not None else w.is_zero()
                row.append(ok)
                if not ok:
                    bad.append((m, s, t))
            block.append(tuple(row))
        out.append(tuple(block))
    return SquareFreeReport(tuple(out), not bad, tuple(bad))


def square_free_on_inverse_pairs(ct: CocycleTable) -> bool:
    """The same bound checked only on the entries w_M(s, s^-1)."""
    sf = square_free_check(ct)
    g = ct.group
    return all(
        sf.entries[m][s][g.inv(s)]
        for m in range(ct.ext.ideal_count) for s in range(g.order))


def fundamental_left_order_criterion(ct: CocycleTable) -> bool:
    """Whether the left order of the graded radical is the order itself.

    Only available when the base value group has a least positive element
    (principal maximal ideal); then the criterion is exactly the
    square-free bound on the inverse-pair entries."""
    if ct.ext.gamma.sub.least_positive() is None:
        raise HypothesisError(
            "left-order criterion needs a principal base value group")
    return square_free_on_inverse_pairs(ct)


@dataclass
class ClassificationReport:
    semihereditary: VerdictEntry
    maximal: VerdictEntry
    extremal: VerdictEntry
    primary: VerdictEntry
    dubrovin: VerdictEntry
    invariant_valuation_ring: VerdictEntry
    azumaya: VerdictEntry
    facts: dict
    structure: dict | None = None
    consistency: list = field(default_factory=list)

    def entries(self) -> dict[str, VerdictEntry]:
        return {
            "semihereditary": self.semihereditary,
            "maximal": self.maximal,
            "extremal": self.extremal,
            "primary": self.primary,
            "dubrovin": self.dubrovin,
            "invariant_valuation_ring": self.invariant_valuation_ring,
            "azumaya": self.azumaya,
        }

    def to_json(self) -> dict:
        return {
            "verdicts": {k: v.to_json() for k, v in self.entries().items()},
            "facts": self.facts,
            "structure": self.structure,
            "consistency": [
                {"name": n, "ok": ok, "detail": d}
                for n, ok, d in self.consistency
            ],
        }


def _and3(a: VerdictEntry, b: VerdictEntry, rule: str,
          what: str) -> VerdictEntry:
    if Verdict.NO in (a.verdict, b.verdict):
        which = "first" if a.verdict == Verdict.NO else "second"
        return _no(rule, f"{what}: the {which} conjunct fails")
    if a.verdict == b.verdict == Verdict.YES:
        return _yes(rule, f"{what}: both conjuncts hold")
    return _unknown(rule, f"{what}: a conjunct is undecided")


def classify(ct: CocycleTable,
             residue: ResidueData | None = None) -> ClassificationReport:
    g, ext = ct.group, ct.ext
    n, r = g.order, ext.ideal_count
    h = unit_subgroup(ct)
    full_h = len(h) == n
    e = ext.ramification_index()
    t0 = len(ext.inertia[0])
    tame = math.gcd(ext.p_bar, t0) == 1
    unram = t0 == 1
    principal = ext.gamma.sub.least_positive() is not None
    sf = square_free_check(ct)
    fg = ext.flags.integral_closure_fg
    facts = {
        "group_order": n,
        "ideal_count": r,
        "unit_subgroup": sorted(h),
        "unit_subgroup_full": full_h,
        "ramification_index": e,
        "inertia_order": t0,
        "residue_char_exponent": ext.p_bar,
        "tame_and_defectless": tame,
        "unramified_and_defectless": unram,
        "base_maximal_ideal_principal": principal,
        "square_free_all": sf.all_true,
        "integral_closure_fg": fg,
    }

    azumaya = _iff(
        full_h and unram, "azumaya-unit-group-and-unramified",
        "every basis unit is invertible and the inertia group is trivial, "
        "so the order is separable over its center",
        "an Azumaya order forces every basis unit invertible and trivial "
        "inertia; here that fails")

    # --- semihereditary ---------------------------------------------------
    if n == 1:
        semi = _yes("trivial-group",
                    "the order coincides with the extension valuation ring")
    elif not principal:
        if tame:
            semi = _iff(
                full_h, "nonprincipal-tame-full-unit-group",
                "idempotent base maximal ideal, tame defectless extension, "
                "and every basis unit invertible",
                "with an idempotent base maximal ideal, semihereditary "
                "forces every basis unit invertible")
        elif ext.flags.residue_perfect:
            semi = _no(
                "nonprincipal-perfect-residue-needs-tame",
                "over a perfect residue field with idempotent base maximal "
                "ideal, semihereditary forces a tame defectless extension")
        elif not full_h:
            semi = _no(
                "nonprincipal-unit-group-proper",
                "with an idempotent base maximal ideal, semihereditary "
                "forces every basis unit invertible")
        else:
            semi = _unknown(
                "nonprincipal-wild-imperfect",
                "wild extension over an imperfect residue field with an "
                "idempotent base maximal ideal: no decidable criterion")
    elif tame:
        semi = _iff(
            sf.all_true, "principal-tame-squarefree",
            "principal base maximal ideal, tame defectless extension, and "
            "every cocycle value below the square of each maximal ideal",
            "a cocycle value lands inside the square of a maximal ideal, "
            f"first at (ideal, s, t) = {sf.failures[0] if sf.failures else None}")
    elif r == 1 and len(h) == 1:
        semi = _iff(
            sf.all_true, "indecomposed-trivial-unit-group-squarefree",
            "indecomposed base with no nontrivial invertible basis unit: "
            "the square-free bound is equivalent to semihereditary",
            "indecomposed base with no nontrivial invertible basis unit, "
            "and a cocycle value inside the square of the maximal ideal")
    elif ext.gamma.sub.rank == 1 and ext.flags.residue_perfect:
        semi = _no(
            "rank-one-perfect-residue-needs-tame",
            "over a rank-one base with perfect residue field, "
            "semihereditary forces a tame defectless extension")
    else:
        semi = _unknown(
            "principal-wild-undecided",
            "principal base maximal ideal but a wild extension: no "
            "decidable criterion applies")

    # --- primary ----------------------------------------------------------
    reps_ideal = None
    if n == 1:
        primary = _yes("trivial-group", "the order is a valuation ring")
    elif r == 1 and len(h) == 1:
        primary = _yes(
            "indecomposed-trivial-unit-group",
            "the graded radical has a residue field as quotient, so the "
            "radical is maximal")
    elif tame:
        for m in range(r):
            if nice_coset_reps(ct, m) is not None:
                reps_ideal = m
                break
        if reps_ideal is None:
            primary = _no(
                "tame-no-unit-coset-representatives",
                "no maximal ideal admits coset representatives of its "
                "stabilizer with invertible pair value, which primarity "
                "requires in the tame defectless case")
        else:
            m = reps_ideal
            hm = unit_subgroup_at(ct, m)
            km = sorted(hm & ext.inertia[m])
            if len(km) == 1:
                primary = _yes(
                    "tame-trivial-inertial-unit-part",
                    "unit coset representatives exist and the inertial part "
                    "of the local unit subgroup is trivial, so the residue "
                    "ring is a matrix ring over a field")
            elif residue is not None:
                sub_c = [[residue.cocycle[a][b] for b in km] for a in km]
                from .cocycle import _subgroup_group
                kgrp, _ = _subgroup_group(g, frozenset(km))
                alg = twisted_group_algebra(residue.field, kgrp, sub_c)
                primary = _iff(
                    is_primary(alg), "tame-inertial-twisted-group-algebra",
                    "the residue twisted group algebra on the inertial unit "
                    "part is primary",
                    "the residue twisted group algebra on the inertial unit "
                    "part is not primary")
            else:
                primary = _unknown(
                    "tame-needs-residue-cocycle",
                    "primarity depends on the residue twisted group algebra "
                    "on the inertial unit part, and no residue data is given")
    else:
        primary = _unknown(
            "wild-primarity-undecided",
            "no decidable primarity criterion outside the tame defectless "
            "case")

    # --- Dubrovin valuation ring -------------------------------------------
    dubrovin = _and3(semi, primary, "semihereditary-and-primary",
                     "a valuation ring of the ambient algebra is exactly a "
                     "semihereditary primary order")

    # --- maximal ------------------------------------------------------------
    if n == 1:
        maximal = _yes("trivial-group",
                       "the order coincides with the extension valuation ring")
    elif not principal:
        if semi.verdict == Verdict.YES:
            maximal = _yes(
                "nonprincipal-semihereditary-is-maximal",
                "with an idempotent base maximal ideal, semihereditary "
                "orders are maximal")
        elif fg and dubrovin.verdict != Verdict.UNKNOWN:
            maximal = VerdictEntry(
                dubrovin.verdict, "fg-maximal-iff-valuation-ring",
                "for a module-finite order, maximal is equivalent to being "
                "a valuation ring of the ambient algebra")
        else:
            maximal = _unknown(
                "nonprincipal-maximal-undecided",
                "maximality is undecided without a decidable criterion")
    elif not sf.all_true:
        maximal = _no(
            "principal-maximal-needs-squarefree",
            "with a principal base maximal ideal, a maximal order keeps "
            "every cocycle value out of the square of each maximal ideal")
    elif tame and semi.verdict == Verdict.NO:
        maximal = _no(
            "tame-maximal-implies-semihereditary",
            "in the tame defectless principal case a maximal order is "
            "semihereditary, which fails here")
    elif fg and dubrovin.verdict != Verdict.UNKNOWN:
        maximal = VerdictEntry(
            dubrovin.verdict, "fg-maximal-iff-valuation-ring",
            "for a module-finite order, maximal is equivalent to being a "
            "valuation ring of the ambient algebra")
    else:
        maximal = _unknown(
            "maximal-undecided",
            "maximality is undecided without module-finiteness")

    # --- extremal -----------------------------------------------------------
    if n == 1:
        extremal = _yes("trivial-group",
                        "the order coincides with the extension valuation "
                        "ring")
    elif not principal:
        extremal = VerdictEntry(
            maximal.verdict, "nonprincipal-extremal-iff-maximal",
            "with an idempotent base maximal ideal, extremal and maximal "
            "coincide")
    elif tame:
        extremal = VerdictEntry(
            semi.verdict, "principal-tame-extremal-iff-semihereditary",
            "in the tame defectless principal case extremal and "
            "semihereditary coincide")
    elif semi.verdict == Verdict.YES:
        extremal = _yes("semihereditary-implies-extremal",
                        "semihereditary orders are extremal")
    else:
        extremal = _unknown("extremal-undecided",
                            "no decidable extremality criterion applies")

    # --- invariant valuation ring --------------------------------------------
    if n == 1:
        ivr = _yes("trivial-group",
                   "the order coincides with the extension valuation ring")
    elif r == 1 and len(h) == 1:
        ivr = VerdictEntry(
            semi.verdict, "indecomposed-trivial-unit-group-invariant",
            "indecomposed base with no nontrivial invertible basis unit: "
            "semihereditary is equivalent to being an invariant valuation "
            "ring of a cyclic division algebra")
    elif dubrovin.verdict == Verdict.NO:
        ivr = _no("invariant-implies-valuation-ring",
                  "an invariant valuation ring is in particular a valuation "
                  "ring of the ambient algebra, which fails here")
    else:
        ivr = _unknown("invariant-undecided",
                       "being invariant is undecided from the value data")

    # --- emitted chain structure ----------------------------------------------
    structure = None
    if principal and tame and r == 1 and n > 1 and not full_h \
            and semi.verdict == Verdict.YES:
        structure = _chain_structure(ct, h)

    consistency = _consistency_checks(ct, h, tame, e, principal, sf, semi)

    return ClassificationReport(
        semihereditary=semi, maximal=maximal, extremal=extremal,
        primary=primary, dubrovin=dubrovin, invariant_valuation_ring=ivr,
        azumaya=azumaya, facts=facts, structure=structure,
        consistency=consistency)


def _chain_structure(ct: CocycleTable, h: frozenset[int]) -> dict:
    """For a semihereditary indecomposed tame table with a proper unit
    subgroup: the unit subgroup is normal with cyclic quotient, and the
    graph is the chain of powers of one generating coset."""
    g = ct.group
    graph = graph_of_table(ct)
    out = {
        "unit_subgroup": sorted(h),
        "unit_subgroup_normal": g.is_normal_in(h, g.elements()),
        "graph_is_chain": graph.is_chain(),
        "generator": None,
        "chain": None,
        "quotient_cyclic": False,
    }
    if not graph.is_chain():
        return out
    order = sorted(range(graph.size),
                   key=lambda i: sum(graph.leq[j][i] for j in range(graph.size)))
    chain = [graph.labels[i] for i in order]
    out["chain"] = [list(lab) for lab in chain]
    if len(chain) < 2:
        return out
    sigma = chain[1][0]
    k = len(chain)
    powers_match = all(
        g.power(sigma, i) in set(chain[i]) for i in range(k))
    if powers_match:
        out["generator"] = sigma
        out["quotient_cyclic"] = True
    return out


def _consistency_checks(ct, h, tame, e, principal, sf, semi):
    g, ext = ct.group, ct.ext
    n, r = g.order, ext.ideal_count
    checks = []
    if ext.flags.integral_closure_fg and tame and e == n \
            and semi.verdict == Verdict.YES:
        checks.append((
            "tame-totally-ramified-semihereditary-full-units",
            len(h) == n,
            f"unit subgroup has order {len(h)}, group order {n}"))
    if ext.flags.integral_closure_fg and tame and semi.verdict == Verdict.YES:
        ok = True
        detail = ""
        for m in range(r):
            hm = unit_subgroup_at(ct, m)
            if not ext.inertia[m] <= hm:
                ok = False
                detail = f"inertia at ideal {m} escapes the local unit group"
                break
        checks.append(("tame-semihereditary-inertia-in-local-units", ok,
                       detail))
        if ok and g.is_abelian():
            checks.append((
                "abelian-inertia-in-global-units",
                all(ext.inertia[m] <= h for m in range(r)),
                ""))
    if not principal and semi.verdict == Verdict.YES:
        checks.append(("nonprincipal-semihereditary-full-units",
                       len(h) == n, ""))
    if principal and sf.all_true:
        ok = all(graph_mod_ideal(ct, m).is_chain() for m in range(r))
        checks.append(("squarefree-per-ideal-chains", ok, ""))
    return checks


def auslander_rim(ct: CocycleTable,
                  residue_perfect_not_required: bool = True) -> VerdictEntry:
    """Semihereditary decision available when the value cocycle is a
    coboundary (the order is built from a cocycle trivial over the fraction
    field): semihereditary iff tame defectless and square-free."""
    res = is_coboundary(ct)
    if not res.is_coboundary:
        raise HypothesisError(
            "the value cocycle is not a coboundary; this criterion does "
            "not apply")
    tame = math.gcd(ct.ext.p_bar, len(ct.ext.inertia[0])) == 1
    sf = square_free_check(ct)
    return _iff(
        tame and sf.all_true, "coboundary-tame-squarefree",
        "coboundary value cocycle with tame defectless extension and "
        "square-free values",
        "a coboundary value cocycle is semihereditary only over a tame "
        "defectless extension with square-free values")


def harada(ct: CocycleTable) -> VerdictEntry:
    """Semihereditary decision for rank-one or idempotent base maximal
    ideal over a perfect residue field."""
    ext = ct.ext
    principal = ext.gamma.sub.least_positive() is not None
    if principal and ext.gamma.sub.rank != 1:
        raise HypothesisError(
            "criterion needs rank one or an idempotent base maximal ideal")
    if not ext.flags.residue_perfect:
        raise HypothesisError("criterion needs a perfect residue field")
    tame = math.gcd(ext.p_bar, len(ext.inertia[0])) == 1
    sf = square_free_check(ct)
    return _iff(
        tame and sf.all_true, "perfect-residue-tame-squarefree",
        "tame defectless extension with square-free values over a perfect "
        "residue field",
        "over a perfect residue field, semihereditary forces a tame "
        "defectless extension with square-free values")


def schur_index(ct: CocycleTable) -> int:
    """Schur index of the ambient algebra when the order is maximal over a
    local field with finite residue field."""
    if not ct.ext.flags.local_field_finite_residue:
        raise HypothesisError(
            "Schur index formula needs a local field with finite residue "
            "field")
    h = unit_subgroup(ct)
    return ct.ext.ramification_index() * ct.group.order // len(h)


@dataclass(frozen=True)
class DivisionCheck:
    is_division: bool
    degree: int
    norm_residue: object

    def to_json(self) -> dict:
        return {
            "is_division": self.is_division,
            "degree": self.degree,
            "norm_residue": str(self.norm_residue),
        }


def division_algebra_check(ct: CocycleTable,
                           residue: ResidueData) -> DivisionCheck:
    """For a tame totally ramified cyclic extension of a Henselian base with
    module-finite extension ring and every basis unit invertible: the
    ambient algebra is a division algebra iff X^n - a is irreducible over
    the residue field, where a is the norm-like product of residue cocycle
    values along a generator."""
    g, ext = ct.group, ct.ext
    n = g.order
    if not ext.flags.henselian:
        raise HypothesisError("criterion needs a Henselian base")
    if not ext.flags.integral_closure_fg:
        raise HypothesisError("criterion needs a module-finite extension ring")
    tame = math.gcd(ext.p_bar, len(ext.inertia[0])) == 1
    if not (tame and ext.ramification_index() == n):
        raise HypothesisError(
            "criterion needs a tame totally ramified extension")
    if len(unit_subgroup(ct)) != n:
        raise HypothesisError("criterion needs every basis unit invertible")
    sigma = g.generator()
    if sigma is None:
        raise HypothesisError("criterion needs a cyclic group")
    f = residue.field
    a = f.one()
    x = 0
    for _ in range(n):
        a = f.mul(a, f.coerce(residue.cocycle[x][sigma]))
        x = g.mul(x, sigma)
    return DivisionCheck(
        is_division=xn_minus_a_irreducible(f, n, a),
        degree=n,
        norm_residue=a)
