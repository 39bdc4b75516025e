from fractions import Fraction as F

import pytest

from crossorder import AlgebraDesc, ExactField, cyclic, dihedral, \
    is_primary, is_semisimple, is_simple, radical_basis, \
    twisted_group_algebra, xn_minus_a_irreducible
from crossorder.errors import StructureError
from crossorder.residue import in_span, kernel_basis, quotient_algebra, rref


def trivial_cocycle(field, n):
    one = field.one()
    return [[one] * n for _ in range(n)]


def cyclic_power_cocycle(field, n, x):
    """a(s^i, s^j) = x when i + j >= n else 1 (the classical pattern)."""
    one = field.one()
    return [[field.coerce(x) if i + j >= n else one for j in range(n)]
            for i in range(n)]


def test_field_arithmetic():
    f5 = ExactField("Fp", 5)
    assert f5.mul(3, 4) == 2
    assert f5.inv(3) == 2
    assert f5.coerce(F(1, 2)) == 3
    q = ExactField("Q")
    assert q.inv(F(2, 3)) == F(3, 2)
    with pytest.raises(StructureError):
        ExactField("Fp", 6)


def test_linear_algebra():
    q = ExactField("Q")
    rows = [[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(0), F(1), F(1)]]
    red, pivots = rref(q, rows)
    assert len(pivots) == 2
    ker = kernel_basis(q, rows)
    assert len(ker) == 1
    assert in_span(q, ker, ker[0])
    assert not in_span(q, ker, [F(1), F(0), F(0)])


def test_group_algebra_q_c2():
    q = ExactField("Q")
    alg = twisted_group_algebra(q, cyclic(2), trivial_cocycle(q, 2))
    assert alg.check_axioms() == []
    assert is_semisimple(alg)
    assert not is_simple(alg)       # splits as Q x Q
    assert not is_primary(alg)


def test_twisted_c2_is_a_field():
    q = ExactField("Q")
    alg = twisted_group_algebra(q, cyclic(2),
                                cyclic_power_cocycle(q, 2, F(2)))
    assert is_simple(alg) and is_primary(alg)   # Q(sqrt 2)


def test_modular_group_algebra_is_primary():
    f3 = ExactField("Fp", 3)
    alg = twisted_group_algebra(f3, cyclic(3), trivial_cocycle(f3, 3))
    rad = radical_basis(alg)
    assert len(rad) == 2
    assert not is_semisimple(alg)
    assert is_primary(alg)
    assert is_simple(quotient_algebra(alg, rad))


def test_s3_group_algebra_not_primary():
    f5 = ExactField("Fp", 5)
    alg = twisted_group_algebra(f5, dihedral(3), trivial_cocycle(f5, 6))
    assert is_semisimple(alg)
    assert not is_simple(alg)
    assert not is_primary(alg)


def test_twisted_c4_with_nonresidue_is_simple():
    f5 = ExactField("Fp", 5)
    alg = twisted_group_algebra(f5, cyclic(4),
                                cyclic_power_cocycle(f5, 4, 2))
    assert is_simple(alg)


def test_radical_certificates():
    q = ExactField("Q")
    # upper triangular 2x2 matrices: basis 1, e11, e12; radical = <e12>
    dim = 3
    mult = [[[q.zero()] * dim for _ in range(dim)] for _ in range(dim)]

    def setm(i, j, vec):
        mult[i][j] = [q.coerce(x) for x in vec]

    setm(0, 0, [1, 0, 0]); setm(0, 1, [0, 1, 0]); setm(0, 2, [0, 0, 1])
    setm(1, 0, [0, 1, 0]); setm(1, 1, [0, 1, 0]); setm(1, 2, [0, 0, 1])
    setm(2, 0, [0, 0, 1]); setm(2, 1, [0, 0, 0]); setm(2, 2, [0, 0, 0])
    alg = AlgebraDesc(q, dim, tuple(
        tuple(tuple(v) for v in row) for row in mult))
    assert alg.check_axioms() == []
    rad = radical_basis(alg)
    assert len(rad) == 1
    quo = quotient_algebra(alg, rad)
    assert is_semisimple(quo)
    assert not is_primary(alg)      # quotient is Q x Q


def test_power_binomials_over_small_prime_fields():
    import sympy
    for p in (2, 3, 5, 7):
        f = ExactField("Fp", p)
        for n in range(1, 7):
            for a in f.nonzero_elements():
                x = sympy.Symbol("x")
                expected = sympy.Poly(
                    x**n - a, x, domain=sympy.GF(p)).is_irreducible
                assert xn_minus_a_irreducible(f, n, a) == expected, (p, n, a)


def test_power_binomials_over_rationals():
    import sympy
    q = ExactField("Q")
    x = sympy.Symbol("x")
    for n in range(1, 5):
        for a in range(-10, 11):
            if a == 0:
                continue
            expected = sympy.Poly(x**n - a, x, domain="QQ").is_irreducible
            assert xn_minus_a_irreducible(q, n, F(a)) == expected, (n, a)


def test_nonzero_scalars_required():
    f5 = ExactField("Fp", 5)
    bad = trivial_cocycle(f5, 2)
    bad[1][1] = 0
    with pytest.raises(StructureError):
        twisted_group_algebra(f5, cyclic(2), bad)
