"""Galois extension data at the valuation level.

An ExtensionDescriptor packages the finite group, its transitive action on
the maximal-ideal set, the value-group embedding, per-ideal inertia
subgroups, and the residue flags.  Everything the decision procedures need
about the extension is derived from this combinatorial data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import StructureError
from .groups import FiniteGroup
from .values import SubgroupEmbedding, subgroup_index


@dataclass(frozen=True)
class ExtensionFlags:
    defectless: bool = False
    residue_separable: bool = True
    residue_perfect: bool = True
    henselian: bool = False
    integral_closure_fg: bool = False
    local_field_finite_residue: bool = False

    def to_json(self) -> dict:
        return {
            "defectless": self.defectless,
            "residue_separable": self.residue_separable,
            "residue_perfect": self.residue_perfect,
            "henselian": self.henselian,
            "integral_closure_fg": self.integral_closure_fg,
            "local_field_finite_residue": self.local_field_finite_residue,
        }

    @staticmethod
    def from_json(obj: dict) -> "ExtensionFlags":
        return ExtensionFlags(**obj)


@dataclass(frozen=True)
class ExtensionDescriptor:
    group: FiniteGroup
    ideal_count: int
    action: tuple[tuple[int, ...], ...]     # action[sigma][m] = sigma(m)
    gamma: SubgroupEmbedding                # value groups of base inside extension
    inertia: tuple[frozenset[int], ...]     # one subgroup per ideal
    p_bar: int = 1                          # characteristic exponent of the residue field
    f_res: int = 1                          # residue degree, shared by all ideals
    flags: ExtensionFlags = field(default_factory=ExtensionFlags)

    def __post_init__(self):
        n, r = self.group.order, self.ideal_count
        if r < 1:
            raise StructureError("ideal_count must be >= 1")
        if len(self.action) != n or any(len(row) != r for row in self.action):
            raise StructureError("action table must be |G| x ideal_count")
        if len(self.inertia) != r:
            raise StructureError("one inertia subgroup required per ideal")
        if self.p_bar < 1 or self.f_res < 1:
            raise StructureError("p_bar and f_res must be >= 1")

    def act(self, sigma: int, m: int) -> int:
        return self.action[sigma][m]

    def ramification_index(self) -> int:
        return subgroup_index(self.gamma)

    def decomposition_group(self, m: int) -> frozenset[int]:
        """Stabilizer of the ideal m under the group action."""
        if not 0 <= m < self.ideal_count:
            raise StructureError(f"ideal index {m} out of range")
        return frozenset(s for s in self.group.elements() if self.act(s, m) == m)

    def inertia_group(self, m: int) -> frozenset[int]:
        if not 0 <= m < self.ideal_count:
            raise StructureError(f"ideal index {m} out of range")
        return self.inertia[m]

    def ramification_group(self, m: int) -> frozenset[int]:
        """The unique Sylow subgroup of the inertia group for the residue
        characteristic exponent; trivial in residue characteristic zero."""
        if self.p_bar == 1:
            return frozenset({0})
        g, t = self.group, self.inertia[m]
        candidate = frozenset(
            h for h in t if _is_prime_power_order(g.element_order(h), self.p_bar))
        p_part = _p_part(len(t), self.p_bar)
        if len(candidate) != p_part or not g.is_subgroup(candidate):
            raise StructureError(
                f"inertia group at ideal {m} has no normal Sylow "
                f"{self.p_bar}-subgroup")
        return candidate

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "ideals": self.ideal_count,
            "action": [list(r) for r in self.action],
            "gamma_V": self.gamma.sub.to_json(),
            "gamma_S": self.gamma.ambient.to_json(),
            "inertia": [sorted(s) for s in self.inertia],
            "p_bar": self.p_bar,
            "f_res": self.f_res,
            "flags": self.flags.to_json(),
        }


def _is_prime_power_order(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


def _p_part(k: int, p: int) -> int:
    out = 1
    while k % p == 0:
        out *= p
        k //= p
    return out


@dataclass
class ValidationReport:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, ok, detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self) -> list[tuple[str, str]]:
        return [(name, detail) for name, ok, detail in self.checks if not ok]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {"name": n, "ok": ok, "detail": d} for n, ok, d in self.checks
            ],
        }


def validate_extension(d: ExtensionDescriptor) -> ValidationReport:
    """Check every structural invariant of the descriptor."""
    rep = ValidationReport()
    g, r = d.group, d.ideal_count

    axioms = g.check_axioms()
    rep.add("group-axioms", not axioms, "; ".join(axioms))
    if axioms:
        return rep

    left_action = all(d.act(0, m) == m for m in range(r)) and all(
        d.act(g.mul(a, b), m) == d.act(a, d.act(b, m))
        for a in g.elements() for b in g.elements() for m in range(r))
    rep.add("left-action", left_action,
            "" if left_action else "action table is not a left action")

    orbit = {0}
    frontier = [0]
    while frontier:
        m = frontier.pop()
        for s in g.elements():
            sm = d.act(s, m)
            if sm not in orbit:
                orbit.add(sm)
                frontier.append(sm)
    rep.add("transitive", len(orbit) == r,
            "" if len(orbit) == r else f"orbit of ideal 0 has size {len(orbit)} != {r}")

    for m in range(r):
        gz = d.decomposition_group(m)
        t = d.inertia[m]
        ok = t <= gz and g.is_subgroup(t) and g.is_normal_in(t, gz)
        rep.add(f"inertia-normal-in-decomposition[{m}]", ok,
                "" if ok else f"inertia at ideal {m} is not a normal subgroup "
                              f"of the stabilizer")
    if left_action and len(orbit) == r:
        gz0 = d.decomposition_group(0)
        rep.add("orbit-stabilizer", g.order == len(gz0) * r,
                f"|G|={g.order}, |stab|={len(gz0)}, r={r}")

    conj_ok = all(
        d.inertia[d.act(s, m)] == g.conjugate_subgroup(d.inertia[m], s)
        for s in g.elements() for m in range(r))
    rep.add("inertia-conjugation", conj_ok,
            "" if conj_ok else "inertia subgroups are not conjugation-compatible")

    try:
        e = d.ramification_index()
        rep.add("gamma-finite-index", True, f"e={e}")
    except Exception as exc:  # infinite index
        rep.add("gamma-finite-index", False, str(exc))
        e = None

    if d.flags.defectless and e is not None:
        ok = g.order == e * d.f_res * r
        rep.add("defectless-equality", ok,
                f"|G|={g.order} vs e*f*r={e}*{d.f_res}*{r}")

    if d.flags.henselian:
        rep.add("henselian-indecomposed", r == 1,
                "" if r == 1 else "henselian base must be indecomposed")

    if d.p_bar > 1:
        try:
            for m in range(r):
                d.ramification_group(m)
            rep.add("sylow-ramification-group", True, "")
        except StructureError as exc:
            rep.add("sylow-ramification-group", False, str(exc))
    return rep


@dataclass(frozen=True)
class RamificationFlags:
    unramified: bool
    tame: bool
    totally_ramified: bool
    indecomposed: bool

    def to_json(self) -> dict:
        return {
            "unramified": self.unramified,
            "tame": self.tame,
            "totally_ramified": self.totally_ramified,
            "indecomposed": self.indecomposed,
        }


def classify_ramification(d: ExtensionDescriptor) -> RamificationFlags:
    """Ramification-type booleans.

    `tame` here means tamely ramified *and* defectless, which for a Galois
    extension is equivalent to the residue characteristic exponent being
    coprime to the inertia order; `unramified` additionally needs trivial
    ramification index and separable residue extension.
    """
    e = d.ramification_index()
    t0 = len(d.inertia[0])
    return RamificationFlags(
        unramified=(e == 1 and d.flags.residue_separable),
        tame=math.gcd(d.p_bar, t0) == 1,
        totally_ramified=(d.group.order == e),
        indecomposed=(d.ideal_count == 1),
    )


def decomposition_group(d: ExtensionDescriptor, m: int) -> frozenset[int]:
    return d.decomposition_group(m)


def unramified_defectless(d: ExtensionDescriptor) -> bool:
    """True when the extension is unramified and defectless, read off the
    inertia group being trivial."""
    return len(d.inertia[0]) == 1


def tamely_ramified_defectless(d: ExtensionDescriptor) -> bool:
    """True when the extension is tamely ramified and defectless (residue
    characteristic exponent coprime to the inertia order)."""
    return math.gcd(d.p_bar, len(d.inertia[0])) == 1
