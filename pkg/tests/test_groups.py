import pytest

from crossorder import FiniteGroup, StructureError, cyclic, dihedral, \
    direct_product, standard_groups


def test_menu_satisfies_axioms():
    for name, g in standard_groups(8):
        assert g.check_axioms() == [], name


def test_cyclic_basics():
    g = cyclic(6)
    assert g.order == 6
    assert g.mul(4, 5) == 3
    assert g.inv(2) == 4
    assert g.element_order(2) == 3
    assert g.is_abelian() and g.is_cyclic()
    assert g.generator() in (1, 5)
    assert g.power(2, 3) == 0


def test_dihedral_not_abelian():
    d4 = dihedral(4)
    assert d4.order == 8
    assert not d4.is_abelian()
    assert d4.generator() is None


def test_direct_product_structure():
    g = direct_product(cyclic(2), cyclic(4))
    assert g.order == 8
    assert g.is_abelian() and not g.is_cyclic()


def test_subgroups_of_c4():
    g = cyclic(4)
    subs = g.subgroups()
    assert sorted(sorted(s) for s in subs) == [[0], [0, 1, 2, 3], [0, 2]]
    for s in subs:
        assert g.is_subgroup(s)


def test_normality_in_dihedral():
    d3 = dihedral(3)
    rotations = frozenset({0, 1, 2})
    assert d3.is_normal_in(rotations, d3.elements())
    reflection_pair = frozenset({0, 3})
    assert d3.is_subgroup(reflection_pair)
    assert not d3.is_normal_in(reflection_pair, d3.elements())


def test_cosets_partition():
    d4 = dihedral(4)
    sub = frozenset({0, 2})
    left = d4.left_cosets(sub)
    assert sorted(x for c in left for x in c) == list(range(8))
    assert all(len(c) == 2 for c in left)
    right = d4.right_cosets(sub)
    assert sorted(x for c in right for x in c) == list(range(8))


def test_bad_table_rejected():
    with pytest.raises(StructureError):
        FiniteGroup(((0, 1), (1,)))
    assert FiniteGroup(((0, 1), (1, 1))).check_axioms() != []


def test_json_round_trip():
    g = dihedral(4)
    assert FiniteGroup.from_json(g.to_json()) == g
