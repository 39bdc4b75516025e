"""Residue-level algebra computations over exact fields.

Finite-dimensional associative algebras are given by structure constants
over Q or a prime field F_p.  The radical is computed as the kernel of the
regular trace form and then certified by nilpotency, which makes the answer
sound in every characteristic: the radical always lies inside that kernel,
and a nilpotent kernel ideal must equal the radical.  Simplicity reduces to
"zero radical and the center is a field"; primarity to "the semisimple
quotient is simple".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from .errors import DomainError, HypothesisError, StructureError
from .groups import FiniteGroup


@dataclass(frozen=True)
class ExactField:
    """Q (kind "Q") or the prime field F_p (kind "Fp")."""
    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Q", "Fp"):
            raise StructureError(f"unknown field kind {self.kind!r}")
        if self.kind == "Fp" and not sympy.isprime(self.p):
            raise StructureError(f"{self.p} is not prime")
        if self.kind == "Q" and self.p:
            raise StructureError("Q takes no characteristic")

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "Fp" else 0

    def coerce(self, x):
        if self.kind == "Fp":
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise DomainError("denominator not invertible mod p")
                return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
            return int(x) % self.p
        return Fraction(x)

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def add(self, a, b):
        return (a + b) % self.p if self.kind == "Fp" else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.kind == "Fp" else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.kind == "Fp" else a * b

    def neg(self, a):
        return (-a) % self.p if self.kind == "Fp" else -a

    def inv(self, a):
        if self.is_zero(a):
            raise DomainError("division by zero")
        return pow(a, -1, self.p) if self.kind == "Fp" else 1 / Fraction(a)

    def is_zero(self, a) -> bool:
        return a == 0 if self.kind == "Q" else a % self.p == 0

    def nonzero_elements(self):
        if self.kind != "Fp":
            raise DomainError("cannot enumerate Q")
        return range(1, self.p)

    def to_json(self) -> dict:
        return {"field": self.kind} if self.kind == "Q" else \
            {"field": self.kind, "p": self.p}

    @staticmethod
    def from_json(obj: dict) -> "ExactField":
        return ExactField(obj["field"], obj.get("p", 0))


# --- exact linear algebra --------------------------------------------------

def rref(field: ExactField, rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    a = [row[:] for row in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if not field.is_zero(a[i][c])),
                     None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        scale = field.inv(a[r][c])
        a[r] = [field.mul(scale, x) for x in a[r]]
        for i in range(m):
            if i != r and not field.is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [field.sub(x, field.mul(f, y))
                        for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return a, pivots


def kernel_basis(field: ExactField, rows: list[list]) -> list[list]:
    """Basis of the right kernel {x : A x = 0}."""
    if not rows:
        return []
    n = len(rows[0])
    red, pivots = rref(field, rows)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [field.zero()] * n
        vec[fc] = field.one()
        for r, pc in enumerate(pivots):
            vec[pc] = field.neg(red[r][fc])
        basis.append(vec)
    return basis


def row_space_basis(field: ExactField, rows: list[list]) -> list[list]:
    if not rows:
        return []
    red, pivots = rref(field, rows)
    return [red[i] for i in range(len(pivots))]


def in_span(field: ExactField, basis: list[list], vec: list) -> bool:
    if not basis:
        return all(field.is_zero(x) for x in vec)
    red, pivots = rref(field, basis + [vec])
    return len(pivots) == len(row_space_basis(field, basis))


# --- algebras --------------------------------------------------------------

@dataclass(frozen=True)
class AlgebraDesc:
    """Associative unital algebra by structure constants.

    mult[i][j] is the coordinate vector of e_i * e_j; basis element 0 is the
    unity."""
    field: ExactField
    dim: int
    mult: tuple   # mult[i][j][k]

    def __post_init__(self):
        d = self.dim
        if len(self.mult) != d or any(
                len(r) != d or any(len(v) != d for v in r)
                for r in self.mult):
            raise StructureError("structure constants must be dim^3")

    def vec_mul(self, x: list, y: list) -> list:
        f = self.field
        out = [f.zero()] * self.dim
        for i, xi in enumerate(x):
            if f.is_zero(xi):
                continue
            for j, yj in enumerate(y):
                if f.is_zero(yj):
                    continue
                coeff = f.mul(xi, yj)
                for k, c in enumerate(self.mult[i][j]):
                    if not f.is_zero(c):
                        out[k] = f.add(out[k], f.mul(coeff, c))
        return out

    def left_mult_matrix(self, x: list) -> list[list]:
        """Matrix of y |-> x*y in the chosen basis (columns are images)."""
        cols = []
        for j in range(self.dim):
            basis_j = [self.field.zero()] * self.dim
            basis_j[j] = self.field.one()
            cols.append(self.vec_mul(x, basis_j))
        return [[cols[j][i] for j in range(self.dim)]
                for i in range(self.dim)]

    def unit_vector(self) -> list:
        out = [self.field.zero()] * self.dim
        out[0] = self.field.one()
        return out

    def check_axioms(self) -> list[str]:
        f, d = self.field, self.dim
        bad = []
        for i in range(d):
            e_i = [f.one() if k == i else f.zero() for k in range(d)]
            if self.vec_mul(self.unit_vector(), e_i) != e_i \
                    or self.vec_mul(e_i, self.unit_vector()) != e_i:
                bad.append(f"unity fails at basis element {i}")
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    ei = [f.one() if t == i else f.zero() for t in range(d)]
                    ej = [f.one() if t == j else f.zero() for t in range(d)]
                    ek = [f.one() if t == k else f.zero() for t in range(d)]
                    lhs = self.vec_mul(self.vec_mul(ei, ej), ek)
                    rhs = self.vec_mul(ei, self.vec_mul(ej, ek))
                    if lhs != rhs:
                        bad.append(f"associativity fails at ({i},{j},{k})")
                        return bad
        return bad

    def is_commutative(self) -> bool:
        return all(self.mult[i][j] == self.mult[j][i]
                   for i in range(self.dim) for j in range(self.dim))


def matrix_trace(field: ExactField, mat: list[list]):
    t = field.zero()
    for i in range(len(mat)):
        t = field.add(t, mat[i][i])
    return t


def mat_mul(field: ExactField, a: list[list], b: list[list]) -> list[list]:
    n = len(a)
    return [[_dot(field, a[i], [b[k][j] for k in range(n)])
             for j in range(n)] for i in range(n)]


def _dot(field: ExactField, xs, ys):
    t = field.zero()
    for x, y in zip(xs, ys):
        t = field.add(t, field.mul(x, y))
    return t


def twisted_group_algebra(field: ExactField, group: FiniteGroup,
                          cocycle: list[list]) -> AlgebraDesc:
    """Algebra with basis e_s for s in the group and e_s e_t = a(s,t) e_st,
    for a normalized 2-cocycle a with nonzero values."""
    n = group.order
    if len(cocycle) != n or any(len(r) != n for r in cocycle):
        raise StructureError("cocycle must be |G| x |G|")
    a = [[field.coerce(x) for x in row] for row in cocycle]
    for s in range(n):
        if a[0][s] != field.one() or a[s][0] != field.one():
            raise StructureError("cocycle must be normalized")
        for t in range(n):
            if field.is_zero(a[s][t]):
                raise StructureError("cocycle values must be nonzero")
    for s in range(n):
        for t in range(n):
            for u in range(n):
                lhs = field.mul(a[s][t], a[group.mul(s, t)][u])
                rhs = field.mul(a[t][u], a[s][group.mul(t, u)])
                if lhs != rhs:
                    raise StructureError(
                        f"cocycle identity fails at ({s},{t},{u})")
    mult = tuple(
        tuple(
            tuple(a[s][t] if k == group.mul(s, t) else field.zero()
                  for k in range(n))
            for t in range(n))
        for s in range(n))
    return AlgebraDesc(field, n, mult)


def radical_basis(alg: AlgebraDesc) -> list[list]:
    """Basis of the Jacobson radical.

    The kernel of the trace form B(x, y) = tr(L_x L_y) is a two-sided ideal
    that always contains the radical; when that kernel is nilpotent it must
    equal the radical.  If the kernel fails to be nilpotent the trace-form
    method is inconclusive in this characteristic."""
    f, d = alg.field, alg.dim
    lmats = []
    for i in range(d):
        e_i = [f.one() if k == i else f.zero() for k in range(d)]
        lmats.append(alg.left_mult_matrix(e_i))
    gram = [[matrix_trace(f, mat_mul(f, lmats[i], lmats[j]))
             for j in range(d)] for i in range(d)]
    ker = kernel_basis(f, gram)
    if _span_is_nilpotent(alg, ker):
        return ker
    if f.kind == "Fp" and alg.is_commutative():
        # commutative modular case: the radical is the nilradical, i.e. the
        # kernel of a high enough power of the (linear) Frobenius map
        m = 1
        q = f.p
        while q < d:
            q *= f.p
            m += 1
        cols = []
        for j in range(d):
            e_j = [f.zero()] * d
            e_j[j] = f.one()
            x = e_j
            for _ in range(m):
                x = _vec_pow(alg, x, f.p)
            cols.append(x)
        rows = [[cols[j][i] for j in range(d)] for i in range(d)]
        ker = kernel_basis(f, rows)
        if _span_is_nilpotent(alg, ker):
            return ker
    raise HypothesisError(
        "trace-form kernel is not nilpotent; radical computation is "
        "inconclusive in this characteristic")


def _span_is_nilpotent(alg: AlgebraDesc, basis: list[list]) -> bool:
    """Whether the span of a multiplicatively closed set of vectors is a
    nilpotent set: its power chain must strictly descend to zero."""
    f = alg.field
    current = row_space_basis(f, basis)
    while current:
        products = [alg.vec_mul(x, y) for x in current for y in basis]
        nxt = row_space_basis(f, products)
        if len(nxt) == len(current):
            return False
        current = nxt
    return True


def quotient_algebra(alg: AlgebraDesc, ideal: list[list]) -> AlgebraDesc:
    """Quotient by a two-sided ideal, with the image of unity first."""
    f, d = alg.field, alg.dim
    ibasis = row_space_basis(f, ideal)
    # extend the ideal basis to a basis of the algebra, unity first
    ext = [row[:] for row in ibasis]
    chosen = []
    for cand in [alg.unit_vector()] + [
            [f.one() if k == i else f.zero() for k in range(d)]
            for i in range(d)]:
        if not in_span(f, ext, cand):
            ext.append(cand)
            chosen.append(cand)
    qdim = d - len(ibasis)
    if len(chosen) != qdim:
        raise StructureError("ideal basis is not independent")

    full = ibasis + chosen

    def coords(vec: list) -> list:
        # solve full^T c = vec, return the last qdim coordinates
        rows = [[full[j][i] for j in range(d)] + [vec[i]] for i in range(d)]
        red, pivots = rref(f, rows)
        sol = [f.zero()] * len(full)
        for r, pc in enumerate(pivots):
            if pc == len(full):
                raise StructureError("vector outside the span")
            sol[pc] = red[r][len(full)]
        return sol[len(ibasis):]

    mult = tuple(
        tuple(tuple(coords(alg.vec_mul(chosen[i], chosen[j])))
              for j in range(qdim))
        for i in range(qdim))
    return AlgebraDesc(f, qdim, mult)


def center_basis(alg: AlgebraDesc) -> list[list]:
    """Basis of the center, as coordinate vectors."""
    f, d = alg.field, alg.dim
    rows = []
    for j in range(d):
        e_j = [f.one() if k == j else f.zero() for k in range(d)]
        lm = alg.left_mult_matrix(e_j)
        rm_cols = []
        for i in range(d):
            e_i = [f.one() if k == i else f.zero() for k in range(d)]
            rm_cols.append(alg.vec_mul(e_i, e_j))
        rm = [[rm_cols[c][r] for c in range(d)] for r in range(d)]
        for r in range(d):
            rows.append([f.sub(lm[r][c], rm[r][c]) for c in range(d)])
    return kernel_basis(f, rows)


def subalgebra_on_basis(alg: AlgebraDesc, basis: list[list]) -> AlgebraDesc:
    """The (unital) subalgebra spanned by a closed basis containing unity;
    re-expressed in that basis with unity first."""
    f = alg.field
    b = row_space_basis(f, basis)
    if not in_span(f, b, alg.unit_vector()):
        raise StructureError("subalgebra must contain unity")
    # reorder so that coordinates of unity can sit at index 0
    def coords(vec: list) -> list:
        d = alg.dim
        rows = [[b[j][i] for j in range(len(b))] + [vec[i]]
                for i in range(d)]
        red, pivots = rref(f, rows)
        sol = [f.zero()] * len(b)
        for r, pc in enumerate(pivots):
            if pc == len(b):
                raise StructureError("vector outside the subalgebra")
            sol[pc] = red[r][len(b)]
        return sol

    # choose a new basis whose first element is unity
    newb = [alg.unit_vector()]
    for vec in b:
        cand = newb + [vec]
        if len(row_space_basis(f, cand)) == len(cand):
            newb.append(vec)
    if len(newb) != len(b):
        raise StructureError("failed to rebase subalgebra")
    b = newb

    k = len(b)
    mult = tuple(
        tuple(tuple(coords(alg.vec_mul(b[i], b[j]))) for j in range(k))
        for i in range(k))
    return AlgebraDesc(f, k, mult)


def _minimal_polynomial(alg: AlgebraDesc, x: list) -> sympy.Poly:
    """Minimal polynomial of x over the base field, exactly."""
    f, d = alg.field, alg.dim
    powers = [alg.unit_vector()]
    while True:
        nxt = alg.vec_mul(powers[-1], x)
        if in_span(f, powers, nxt):
            break
        powers.append(nxt)
    k = len(powers)
    # solve sum_i c_i x^i = x^k
    rows = [[powers[j][i] for j in range(k)] + [alg.vec_mul(powers[-1], x)[i]]
            for i in range(d)]
    red, pivots = rref(f, rows)
    sol = [f.zero()] * k
    for r, pc in enumerate(pivots):
        sol[pc] = red[r][k]
    t = sympy.Symbol("t")
    if f.kind == "Fp":
        dom = sympy.GF(f.p)
        expr = t ** k - sum(int(sol[i]) * t ** i for i in range(k))
    else:
        dom = sympy.QQ
        expr = t ** k - sum(sympy.Rational(sol[i]) * t ** i for i in range(k))
    return sympy.Poly(expr, t, domain=dom)


def center_is_field(alg: AlgebraDesc) -> bool:
    """Whether the center of the algebra is a field."""
    f = alg.field
    cen = subalgebra_on_basis(alg, center_basis(alg))
    if radical_basis(cen):
        return False
    if cen.dim == 1:
        return True
    if f.kind == "Fp":
        # Berlekamp: the number of simple factors of a reduced commutative
        # algebra over F_p is the dimension of the fixed space of Frobenius.
        d = cen.dim
        frob_cols = []
        for j in range(d):
            e_j = [f.zero()] * d
            e_j[j] = f.one()
            frob_cols.append(_vec_pow(cen, e_j, f.p))
        rows = [[f.sub(frob_cols[j][i],
                       f.one() if i == j else f.zero())
                 for j in range(d)] for i in range(d)]
        return len(kernel_basis(f, rows)) == 1
    # Q: hunt for a primitive element; its minimal polynomial has degree
    # equal to the dimension for a generic element of a reduced commutative
    # algebra, and the algebra is a field iff that polynomial is irreducible.
    for attempt in range(64):
        x = [f.coerce(((attempt + 1) * (i + 1) ** 2 + attempt * i) % 97 - 11)
             for i in range(cen.dim)]
        poly = _minimal_polynomial(cen, x)
        if poly.degree() == cen.dim:
            return poly.is_irreducible
    raise HypothesisError("no primitive element found for the center")


def _vec_pow(alg: AlgebraDesc, x: list, k: int) -> list:
    out = alg.unit_vector()
    base = x
    while k:
        if k & 1:
            out = alg.vec_mul(out, base)
        base = alg.vec_mul(base, base)
        k >>= 1
    return out


def is_semisimple(alg: AlgebraDesc) -> bool:
    return not radical_basis(alg)


def is_simple(alg: AlgebraDesc) -> bool:
    return not radical_basis(alg) and center_is_field(alg)


def is_primary(alg: AlgebraDesc) -> bool:
    """An algebra is primary when its semisimple quotient is simple."""
    rad = radical_basis(alg)
    if not rad:
        return is_simple(alg)
    return is_simple(quotient_algebra(alg, rad))


def _is_qth_power(field: ExactField, a, q: int) -> bool:
    if field.kind == "Fp":
        a = field.coerce(a)
        if field.is_zero(a):
            return True
        g = _gcd(q, field.p - 1)
        return pow(a, (field.p - 1) // g, field.p) == 1
    a = Fraction(a)
    return _fraction_root(a, q) is not None


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _fraction_root(a: Fraction, q: int) -> Fraction | None:
    if a == 0:
        return Fraction(0)
    if a < 0 and q % 2 == 0:
        return None
    sign = -1 if a < 0 else 1
    num = _int_root(abs(a.numerator), q)
    den = _int_root(a.denominator, q)
    if num is None or den is None:
        return None
    return Fraction(sign * num, den)


def _int_root(n: int, q: int) -> int | None:
    r = round(n ** (1.0 / q))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** q == n:
            return cand
    return None


def xn_minus_a_irreducible(field: ExactField, n: int, a) -> bool:
    """Exact irreducibility of X^n - a over Q or F_p.

    Classical criterion: irreducible iff a is not a q-th power for any prime
    q dividing n, and additionally a is not of the form -4 b^4 when 4 | n."""
    if n < 1:
        raise StructureError("degree must be positive")
    a = field.coerce(a)
    if field.is_zero(a):
        raise StructureError("constant term must be nonzero")
    if n == 1:
        return True
    q = 2
    m = n
    primes = set()
    while q * q <= m:
        while m % q == 0:
            primes.add(q)
            m //= q
        q += 1
    if m > 1:
        primes.add(m)
    for q in sorted(primes):
        if _is_qth_power(field, a, q):
            return False
    if n % 4 == 0:
        if field.kind == "Fp":
            if field.p == 2:
                return True   # -4 b^4 == 0 != a
            target = field.mul(field.neg(field.inv(field.coerce(4))), a)
            if _is_qth_power(field, target, 4):
                return False
        else:
            if _fraction_root(Fraction(a) / -4, 4) is not None:
                return False
    return True
