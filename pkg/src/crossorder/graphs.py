"""Divisibility graphs attached to a cocycle table.

Three finite posets are attached to a table:

* the global graph on cosets sH of the unit subgroup H, with
  sH <= tH  iff  w_M(s, s^-1 t) == 0 at every ideal M;
* the per-ideal graph on equivalence classes [s]_M of the single-ideal
  preorder  s <=_M t  iff  w_M(s, s^-1 t) == 0;
* the localized graph on cosets s H_M inside the stabilizer of M.

The natural maps between them (psi, phi, the canonical epimorphism, and the
cross-ideal comparison) are built here, together with brute-force poset
isomorphism and DOT export.  Everything is small (at most |G| <= 8
vertices), so exhaustive search is fine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cocycle import CocycleTable, unit_subgroup, unit_subgroup_at
from .errors import ConsistencyError, HypothesisError


@dataclass(frozen=True)
class CosetGraph:
    """A finite relation on labelled vertices; for valid tables it is always
    a partial order with the identity class as least element."""
    labels: tuple[tuple[int, ...], ...]
    leq: tuple[tuple[bool, ...], ...]

    @property
    def size(self) -> int:
        return len(self.labels)

    def index_of(self, member: int) -> int:
        for i, lab in enumerate(self.labels):
            if member in lab:
                return i
        raise ConsistencyError(f"element {member} is in no vertex")

    def poset_violations(self) -> list[str]:
        n = self.size
        out = []
        for i in range(n):
            if not self.leq[i][i]:
                out.append(f"not reflexive at {i}")
        for i in range(n):
            for j in range(n):
                if i != j and self.leq[i][j] and self.leq[j][i]:
                    out.append(f"not antisymmetric at ({i},{j})")
                for k in range(n):
                    if self.leq[i][j] and self.leq[j][k] and not self.leq[i][k]:
                        out.append(f"not transitive at ({i},{j},{k})")
        return out

    def is_poset(self) -> bool:
        return not self.poset_violations()

    def is_chain(self) -> bool:
        return self.is_poset() and all(
            self.leq[i][j] or self.leq[j][i]
            for i in range(self.size) for j in range(self.size))

    def least(self) -> int | None:
        for i in range(self.size):
            if all(self.leq[i][j] for j in range(self.size)):
                return i
        return None

    def hasse_edges(self) -> list[tuple[int, int]]:
        """Covering relations i < j with nothing strictly between."""
        n = self.size
        edges = []
        for i in range(n):
            for j in range(n):
                if i == j or not self.leq[i][j]:
                    continue
                if any(self.leq[i][k] and self.leq[k][j]
                       for k in range(n) if k not in (i, j)):
                    continue
                edges.append((i, j))
        return edges

    def to_dot(self, name: str) -> str:
        """Hasse diagram in DOT form, edges sorted for determinism."""
        lines = [f"digraph {name} {{"]
        for i, lab in enumerate(self.labels):
            text = "{" + ",".join(str(x) for x in lab) + "}"
            lines.append(f'  v{i} [label="{text}"];')
        named = sorted(
            (self.labels[i], self.labels[j]) for i, j in self.hasse_edges())
        index = {lab: k for k, lab in enumerate(self.labels)}
        for a, b in named:
            lines.append(f"  v{index[a]} -> v{index[b]};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def poset_isomorphic(a: CosetGraph, b: CosetGraph) -> bool:
    """Brute-force order-isomorphism test (graphs here have <= 8 vertices)."""
    n = a.size
    if n != b.size:
        return False
    def profile(g: CosetGraph, i: int) -> tuple[int, int]:
        return (sum(g.leq[i]), sum(row[i] for row in g.leq))
    pa = sorted(profile(a, i) for i in range(n))
    pb = sorted(profile(b, i) for i in range(n))
    if pa != pb:
        return False
    for perm in itertools.permutations(range(n)):
        if all(a.leq[i][j] == b.leq[perm[i]][perm[j]]
               for i in range(n) for j in range(n)):
            return True
    return False


@dataclass(frozen=True)
class GraphHom:
    src: CosetGraph
    dst: CosetGraph
    mapping: tuple[int, ...]

    def __post_init__(self):
        if len(self.mapping) != self.src.size:
            raise ConsistencyError("mapping size mismatch")

    def preserves_order(self) -> bool:
        n = self.src.size
        return all(
            not self.src.leq[i][j] or self.dst.leq[self.mapping[i]][self.mapping[j]]
            for i in range(n) for j in range(n))

    def reflects_order(self) -> bool:
        n = self.src.size
        return all(
            not self.dst.leq[self.mapping[i]][self.mapping[j]] or self.src.leq[i][j]
            for i in range(n) for j in range(n))

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == self.src.size

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.dst.size

    def is_monomorphism(self) -> bool:
        return self.is_injective() and self.preserves_order() \
            and self.reflects_order()

    def is_isomorphism(self) -> bool:
        return self.is_monomorphism() and self.is_surjective()

    def compose(self, then: "GraphHom") -> "GraphHom":
        if self.dst is not then.src and self.dst != then.src:
            raise ConsistencyError("composition mismatch")
        return GraphHom(self.src, then.dst,
                        tuple(then.mapping[k] for k in self.mapping))


def _graph_from_blocks(ct: CocycleTable, blocks: list[list[int]],
                       leq_elems) -> CosetGraph:
    labels = tuple(tuple(sorted(b)) for b in blocks)
    reps = [lab[0] for lab in labels]
    leq = tuple(
        tuple(leq_elems(reps[i], reps[j]) for j in range(len(reps)))
        for i in range(len(reps)))
    return CosetGraph(labels, leq)


def graph_of_table(ct: CocycleTable) -> CosetGraph:
    """Global graph on cosets of the unit subgroup: sH <= tH iff x_s
    divides x_t at every ideal."""
    h = unit_subgroup(ct)
    blocks = [sorted(c) for c in ct.group.left_cosets(h)]
    return _graph_from_blocks(ct, blocks, ct.divides)


def graph_mod_ideal(ct: CocycleTable, m: int) -> CosetGraph:
    """Per-ideal graph on equivalence classes of the single-ideal preorder;
    defined on all of G."""
    g = ct.group
    n = g.order
    seen = [False] * n
    blocks: list[list[int]] = []
    for s in range(n):
        if seen[s]:
            continue
        cls = [t for t in range(n)
               if ct.divides_at(m, s, t) and ct.divides_at(m, t, s)]
        for t in cls:
            seen[t] = True
        blocks.append(cls)
    return _graph_from_blocks(ct, blocks,
                              lambda s, t: ct.divides_at(m, s, t))


def graph_localized(ct: CocycleTable, m: int) -> CosetGraph:
    """Graph of the localized table: cosets of H_M inside the stabilizer of
    the ideal m, ordered by divisibility at m alone."""
    gz = sorted(ct.ext.decomposition_group(m))
    hm = unit_subgroup_at(ct, m)
    g = ct.group
    seen, blocks = set(), []
    for s in gz:
        if s in seen:
            continue
        coset = sorted(g.mul(s, h) for h in hm)
        seen.update(coset)
        blocks.append(coset)
    return _graph_from_blocks(ct, blocks,
                              lambda s, t: ct.divides_at(m, s, t))


def nice_coset_reps(ct: CocycleTable, m: int) -> tuple[int, ...] | None:
    """Right coset representatives s_1..s_r of the stabilizer of m in G
    with w_m(s_i, s_i^-1) == 0, or None when no coset admits one."""
    g = ct.group
    gz = ct.ext.decomposition_group(m)
    reps = []
    for coset in g.right_cosets(gz):
        found = None
        for s in sorted(coset):
            if ct.unit_pair_value(m, s).is_zero():
                found = s
                break
        if found is None:
            return None
        reps.append(found)
    return tuple(reps)


def psi(ct: CocycleTable, m: int) -> GraphHom:
    """The embedding of the localized graph into the per-ideal graph,
    s H_M |-> [s]_M.  Always a monomorphism; an isomorphism exactly when
    nice coset representatives exist at m."""
    src = graph_localized(ct, m)
    dst = graph_mod_ideal(ct, m)
    mapping = tuple(dst.index_of(lab[0]) for lab in src.labels)
    hom = GraphHom(src, dst, mapping)
    if not hom.is_monomorphism():
        raise ConsistencyError("localized graph does not embed; "
                               "the table is inconsistent")
    return hom


def phi(ct: CocycleTable, m: int) -> GraphHom:
    """The epimorphism from the global graph onto the localized graph,
    sH |-> dH_M where d stabilizes m and w_m(d^-1 s, s^-1 d) == 0.
    Requires nice coset representatives at m."""
    if nice_coset_reps(ct, m) is None:
        raise HypothesisError(
            f"no nice coset representatives at ideal {m}")
    g = ct.group
    gz = sorted(ct.ext.decomposition_group(m))
    src = graph_of_table(ct)
    dst = graph_localized(ct, m)
    mapping = []
    for lab in src.labels:
        s = lab[0]
        d = None
        for cand in gz:
            u = g.mul(g.inv(cand), s)
            if ct.w[m][u][g.mul(g.inv(s), cand)].is_zero():
                d = cand
                break
        if d is None:
            raise ConsistencyError(
                f"no stabilizer element divides coset of {s} at ideal {m}")
        mapping.append(dst.index_of(d))
    hom = GraphHom(src, dst, tuple(mapping))
    if not (hom.preserves_order() and hom.is_surjective()):
        raise ConsistencyError("phi is not an order epimorphism")
    return hom


def canonical_epi(ct: CocycleTable, m: int) -> GraphHom:
    """The canonical map from the global graph to the per-ideal graph,
    sH |-> [s]_M."""
    src = graph_of_table(ct)
    dst = graph_mod_ideal(ct, m)
    mapping = tuple(dst.index_of(lab[0]) for lab in src.labels)
    hom = GraphHom(src, dst, mapping)
    if not hom.preserves_order():
        raise ConsistencyError("canonical map does not preserve order")
    return hom


def cross_ideal_iso(ct: CocycleTable, m: int, n_ideal: int) -> GraphHom:
    """Isomorphism between the per-ideal graphs at two ideals,
    [t]_M |-> [s t]_N for a nice representative s at the target ideal whose
    inverse action carries m to the target."""
    reps = nice_coset_reps(ct, n_ideal)
    if reps is None:
        raise HypothesisError(
            f"no nice coset representatives at ideal {n_ideal}")
    g, ext = ct.group, ct.ext
    src = graph_mod_ideal(ct, m)
    dst = graph_mod_ideal(ct, n_ideal)
    for s in reps:
        if ext.act(g.inv(s), m) != n_ideal:
            continue
        mapping = tuple(dst.index_of(g.mul(s, lab[0])) for lab in src.labels)
        hom = GraphHom(src, dst, mapping)
        if hom.is_isomorphism():
            return hom
        raise ConsistencyError(
            "cross-ideal comparison failed to be an isomorphism")
    raise HypothesisError(
        f"no nice representative carries ideal {m} to ideal {n_ideal}")
