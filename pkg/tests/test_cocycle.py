from fractions import Fraction as F

import pytest

from crossorder import RenormalizationError, build_table, coboundary_twist, \
    cyclic_template, dvr_descriptor, example_rank2, graded_radical, \
    is_coboundary, localize, random_instance, restrict_inertial, \
    unit_subgroup, unit_subgroup_at, validate_cocycle


def delta(ext):
    return ext.gamma.ambient.least_positive()


def test_example_table_valid():
    _, ct = example_rank2()
    rep = validate_cocycle(ct)
    assert rep.ok, rep.failures()
    assert unit_subgroup(ct) == frozenset({0})


def test_identity_violation_detected():
    ext = dvr_descriptor(4)
    gs = ext.gamma.ambient
    d = gs.least_positive()

    def entry(m, s, t):
        # only one nonzero value: breaks the associativity shadow
        return d if (s, t) == (1, 1) else gs.zero()

    rep = validate_cocycle(build_table(ext, entry))
    assert not rep.ok
    assert any("identity" in name for name, _ in rep.failures())


def test_negative_value_detected():
    ext = dvr_descriptor(2)
    gs = ext.gamma.ambient

    def entry(m, s, t):
        return -gs.least_positive() if s == t == 1 else gs.zero()

    rep = validate_cocycle(build_table(ext, entry))
    assert not rep.ok


def test_normalization_detected():
    ext = dvr_descriptor(2)
    gs = ext.gamma.ambient
    rep = validate_cocycle(
        build_table(ext, lambda m, s, t: gs.least_positive()))
    assert not rep.ok


def test_unit_subgroup_of_templates():
    ext = dvr_descriptor(6)
    ct0 = cyclic_template(6, ext.gamma.ambient.zero(), ext)
    assert unit_subgroup(ct0) == frozenset(range(6))
    ct1 = cyclic_template(6, delta(ext), ext)
    assert unit_subgroup(ct1) == frozenset({0})


def test_graded_radical_components():
    ext = dvr_descriptor(3)
    ct = cyclic_template(3, delta(ext), ext)
    rad = graded_radical(ct)
    assert rad.unit_elements == frozenset({0})
    assert [rad.component_in_radical(0, s) for s in range(3)] == \
        [False, True, True]


def test_zero_twist_is_identity():
    for seed in (0, 1, 2):
        ext, ct = random_instance(seed)
        gs = ext.gamma.ambient
        c = tuple(
            tuple(gs.zero() for _ in range(ext.group.order))
            for _ in range(ext.ideal_count))
        assert coboundary_twist(ct, c, mode="K").w == ct.w
        assert coboundary_twist(ct, c, mode="S").w == ct.w


def test_unit_twist_on_trivial_table():
    ext = dvr_descriptor(2)
    gs = ext.gamma.ambient
    ct = cyclic_template(2, gs.zero(), ext)
    one = gs.element(F(1))
    twisted = coboundary_twist(ct, ((gs.zero(), one),), mode="K")
    assert twisted.w[0][1][1] == gs.element(F(2))
    assert validate_cocycle(twisted).ok


def test_twist_renormalizes_negative_raw_values():
    ext = dvr_descriptor(2)
    gs = ext.gamma.ambient
    ct = cyclic_template(2, delta(ext), ext)
    # c(s) = -1/2 drives the raw (s,s) entry to -1/2; the shift (a base
    # group element) restores nonnegativity
    twisted = coboundary_twist(ct, ((gs.zero(), gs.element(F(-1, 2))),),
                               mode="K")
    assert validate_cocycle(twisted).ok
    assert twisted.w[0][1][1].is_nonnegative()


def test_coboundary_decision():
    ext = dvr_descriptor(4)
    gs = ext.gamma.ambient
    ct0 = cyclic_template(4, gs.zero(), ext)
    c = ((gs.zero(), gs.element(F(1, 4)), gs.element(F(1, 2)),
          gs.element(F(3, 4))),)
    twisted = coboundary_twist(ct0, c, mode="K")
    res = is_coboundary(twisted)
    assert res.is_coboundary and res.witness is not None
    # verify the witness reproduces the table
    again = coboundary_twist(ct0, res.witness, mode="K")
    assert again.w == twisted.w

    _, hard = example_rank2()
    assert not is_coboundary(hard).is_coboundary


def test_template_with_unit_value_is_coboundary():
    ext = dvr_descriptor(4)
    # gamma = 1 = 4 * delta: the classical table splits, c(s^i) = i/4 scaled
    ct = cyclic_template(4, ext.gamma.ambient.element(F(1)), ext)
    assert is_coboundary(ct).is_coboundary


def test_template_with_delta_value_is_not_coboundary():
    ext = dvr_descriptor(4)
    ct = cyclic_template(4, delta(ext), ext)
    assert not is_coboundary(ct).is_coboundary


def test_localize_and_restrict():
    for seed in range(25):
        ext, ct = random_instance(seed)
        for m in range(ext.ideal_count):
            loc = localize(ct, m)
            assert validate_cocycle(loc.table).ok
            hm = unit_subgroup_at(ct, m)
            local_h = unit_subgroup(loc.table)
            assert frozenset(loc.to_parent(s) for s in local_h) == hm
            inr = restrict_inertial(ct, m)
            assert validate_cocycle(inr.table).ok


def test_twist_shape_checked():
    ext, ct = example_rank2()
    gs = ext.gamma.ambient
    with pytest.raises(Exception):
        coboundary_twist(ct, ((gs.zero(),),), mode="K")
