import pytest

from crossorder import CosetGraph, HypothesisError, canonical_epi, \
    cross_ideal_iso, cyclic_template, dvr_descriptor, example_rank2, \
    graph_localized, graph_mod_ideal, graph_of_table, nice_coset_reps, phi, \
    poset_isomorphic, psi, random_instance


def chain(n):
    return CosetGraph(
        tuple((i,) for i in range(n)),
        tuple(tuple(i <= j for j in range(n)) for i in range(n)))


def antichain_with_bottom(n):
    return CosetGraph(
        tuple((i,) for i in range(n)),
        tuple(tuple(i == j or i == 0 for j in range(n)) for i in range(n)))


def test_poset_primitives():
    c = chain(4)
    assert c.is_poset() and c.is_chain() and c.least() == 0
    assert c.hasse_edges() == [(0, 1), (1, 2), (2, 3)]
    a = antichain_with_bottom(4)
    assert a.is_poset() and not a.is_chain() and a.least() == 0


def test_poset_isomorphism():
    assert poset_isomorphic(chain(4), chain(4))
    assert not poset_isomorphic(chain(4), chain(3))
    assert not poset_isomorphic(chain(4), antichain_with_bottom(4))


def test_template_graph_is_chain():
    ext = dvr_descriptor(5)
    ct = cyclic_template(5, ext.gamma.ambient.least_positive(), ext)
    g = graph_of_table(ct)
    assert g.size == 5 and g.is_chain() and g.least() == 0
    assert poset_isomorphic(g, graph_mod_ideal(ct, 0))
    assert poset_isomorphic(g, graph_localized(ct, 0))


def test_trivial_table_graph_is_point():
    ext = dvr_descriptor(6)
    ct = cyclic_template(6, ext.gamma.ambient.zero(), ext)
    assert graph_of_table(ct).size == 1
    assert graph_mod_ideal(ct, 0).size == 1


def test_example_two_chain():
    _, ct = example_rank2()
    g = graph_of_table(ct)
    assert g.size == 2 and g.is_chain()


def test_nice_reps_and_psi():
    _, ct = example_rank2()
    assert nice_coset_reps(ct, 0) == (0,)
    assert psi(ct, 0).is_isomorphism()
    hom = phi(ct, 0)
    assert hom.preserves_order() and hom.is_surjective()
    assert hom.compose(psi(ct, 0)).mapping == canonical_epi(ct, 0).mapping


def _decomposed_instance():
    for seed in range(300):
        ext, ct = random_instance(seed)
        if ext.ideal_count > 1 and nice_coset_reps(ct, 1) is not None:
            return ext, ct
    raise AssertionError("no decomposed instance with unit representatives")


def test_cross_ideal_comparison():
    ext, ct = _decomposed_instance()
    hom = cross_ideal_iso(ct, 0, 1)
    assert hom.is_isomorphism()


def test_dot_output_deterministic():
    ext = dvr_descriptor(4)
    ct = cyclic_template(4, ext.gamma.ambient.least_positive(), ext)
    g = graph_of_table(ct)
    text = g.to_dot("g")
    assert text == g.to_dot("g")
    assert text.startswith("digraph g {") and text.endswith("}\n")
    assert text.count("->") == 3


def test_phi_needs_unit_representatives():
    ext = dvr_descriptor(3)
    ct = cyclic_template(3, ext.gamma.ambient.least_positive(), ext)
    # every coset of the full stabilizer contains the identity, so reps exist
    assert nice_coset_reps(ct, 0) == (0,)
    assert phi(ct, 0).is_surjective()


def test_graphs_have_least_element_corpus(corpus):
    for ext, ct in corpus[:60]:
        g = graph_of_table(ct)
        assert g.is_poset()
        assert g.least() is not None and 0 in g.labels[g.least()]
