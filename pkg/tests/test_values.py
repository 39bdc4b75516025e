from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crossorder import Coord, DomainError, HypothesisError, StructureError, \
    SubgroupEmbedding, ValueGroup, coset_representatives, inertial_index, \
    subgroup_index
from crossorder.values import EQUAL, GREATER, LESS, compare


def rank2(d=2):
    return ValueGroup((Coord("Zscaled", d), Coord("Z")))


def test_coord_membership():
    z = Coord("Z")
    assert z.contains(F(3)) and not z.contains(F(1, 2))
    q = Coord("Q")
    assert q.contains(F(22, 7))
    half = Coord("Zscaled", 2)
    assert half.contains(F(1, 2)) and not half.contains(F(1, 3))


def test_least_positive():
    assert Coord("Z").least_positive() == F(1)
    assert Coord("Zscaled", 3).least_positive() == F(1, 3)
    assert Coord("Q").least_positive() is None
    g = rank2()
    assert g.least_positive().entries == (F(0), F(1))
    dense_last = ValueGroup((Coord("Z"), Coord("Q")))
    assert dense_last.least_positive() is None


def test_lexicographic_order():
    g = rank2()
    a = g.element(F(1, 2), F(-5))
    b = g.element(F(0), F(100))
    assert b < a and compare(a, b) == GREATER
    assert compare(a, a) == EQUAL
    assert compare(b, a) == LESS


def test_arithmetic_and_scaling():
    g = rank2()
    a = g.element(F(1, 2), F(1))
    b = g.element(F(1), F(-3))
    assert (a + b).entries == (F(3, 2), F(-2))
    assert (a - b).entries == (F(-1, 2), F(4))
    assert (3 * a).entries == (F(3, 2), F(3))
    assert (a * 2) == 2 * a
    assert (-a).entries == (F(-1, 2), F(-1))
    assert (a - a).is_zero()
    assert a.is_nonnegative() and not (-a).is_nonnegative()


def test_group_mismatch_rejected():
    a = rank2().element(F(0), F(0))
    b = ValueGroup((Coord("Z"),)).element(F(0))
    with pytest.raises(StructureError):
        _ = a + b


def test_coarsen_drops_least_significant():
    g = rank2()
    assert g.coarsen().coords == (Coord("Zscaled", 2),)


def test_subgroup_index_and_cosets():
    amb = rank2(2)
    sub = ValueGroup((Coord("Z"), Coord("Z")))
    emb = SubgroupEmbedding(ambient=amb, sub=sub)
    assert subgroup_index(emb) == 2
    reps = coset_representatives(emb)
    assert len(reps) == 2
    amb3 = ValueGroup((Coord("Zscaled", 2), Coord("Zscaled", 3)))
    emb3 = SubgroupEmbedding(ambient=amb3, sub=sub)
    assert subgroup_index(emb3) == 6


def test_lattice_inside_dense_rejected():
    amb = ValueGroup((Coord("Q"),))
    sub = ValueGroup((Coord("Z"),))
    with pytest.raises(DomainError):
        subgroup_index(SubgroupEmbedding(ambient=amb, sub=sub))


def test_inertial_index():
    amb = rank2(2)
    sub = ValueGroup((Coord("Z"), Coord("Z")))
    emb = SubgroupEmbedding(ambient=amb, sub=sub)
    pi = sub.least_positive()
    # coset reps differ in the most significant coordinate only, so none of
    # the nontrivial ones stays inside the base group there
    assert inertial_index(emb, pi) == 1
    with pytest.raises(HypothesisError):
        inertial_index(emb, 2 * pi)


def test_ceil_to():
    g = ValueGroup((Coord("Z"), Coord("Z")))
    assert g.ceil_to([F(1, 3), F(-1, 2)]).entries == (F(1), F(0))


@given(st.lists(st.fractions(max_denominator=8), min_size=2, max_size=2),
       st.lists(st.fractions(max_denominator=8), min_size=2, max_size=2))
def test_order_translation_invariant(xs, ys):
    g = ValueGroup((Coord("Q"), Coord("Q")))
    a, b = g.element(*xs), g.element(*ys)
    c = g.element(F(7, 3), F(-2))
    assert (a < b) == (a + c < b + c)
    assert (a == b) == ((a - b).is_zero())
