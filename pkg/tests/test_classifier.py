from __future__ import annotations

import pytest

from eilab import classifier as cl
from eilab import graph_core as gc
from eilab.errors import NotApplicable, NotConnected
from eilab.regularity_oracle import FieldSpec

from helpers import cycle, edgeless, path, star


def test_pentagon_test():
    assert cl.pentagon_test(cycle(5))
    chord = gc.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    assert not cl.pentagon_test(chord)
    assert not cl.pentagon_test(path(5))
    with pytest.raises(NotConnected):
        cl.pentagon_test(gc.from_edges(4, [(0, 1), (2, 3)]))


def test_contains_c5_subgraph():
    assert cl.contains_c5_subgraph(cycle(5))
    chord = gc.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    assert cl.contains_c5_subgraph(chord)  # non-induced counts
    assert not cl.contains_c5_subgraph(cycle(6))
    assert not cl.contains_c5_subgraph(path(5))


def test_classify_pentagon_union_star():
    u = gc.disjoint_union(cycle(5), star(2))
    v = cl.classify(u, FieldSpec(0))
    assert v.structural and v.numeric and v.agreement
    assert v.component_shapes == ("pentagon", "star")
    from eilab import matchings as M
    from eilab.regularity_oracle import regularity

    assert regularity(u, FieldSpec(0)).reg_star == 4 == M.nu(u) + 1


def test_classify_c6_both_false():
    v = cl.classify(cycle(6), FieldSpec(0))
    assert not v.structural and not v.numeric and v.agreement


def test_classify_single_vertex():
    v = cl.classify(edgeless(1), FieldSpec(0))
    assert v.structural and v.numeric
    v = cl.classify(edgeless(4), FieldSpec(0))
    assert v.structural and v.numeric


def test_classify_empty_rejected():
    with pytest.raises(NotApplicable):
        cl.classify(gc.from_edges(0, []), FieldSpec(0))


def test_classify_agreement_on_corpus(corpus6):
    for g in corpus6:
        for char in (0, 2):
            assert cl.classify(g, FieldSpec(char)).agreement


def test_lemma_c1_property(corpus6):
    from eilab import matchings as M
    from eilab.regularity_oracle import regularity

    for g in corpus6:
        if cl.contains_c5_subgraph(g):
            continue
        if regularity(g, FieldSpec(0)).reg_star == M.nu(g) + 1:
            assert M.nu(g) == M.nu0(g)


def test_lemma_c2_property(corpus6):
    from eilab import matchings as M
    from eilab.regularity_oracle import regularity

    for g in corpus6:
        if not g.is_connected() or not cl.contains_c5_subgraph(g):
            continue
        if regularity(g, FieldSpec(0)).reg_star == M.nu(g) + 1:
            assert cl.pentagon_test(g)
