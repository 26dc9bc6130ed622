from __future__ import annotations

import pytest

from eilab import formats_io as fio
from eilab import graph_core as gc
from eilab import harness
from eilab.errors import TooLarge, UnknownProperty

from helpers import cycle


def test_enumeration_counts():
    for n, count in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)]:
        assert len(harness.enumerate_connected(n).graphs) == count


def test_enumeration_no_duplicates():
    graphs = harness.enumerate_connected(5).graphs
    forms = {gc.canonical_form(g) for g in graphs}
    assert len(forms) == len(graphs)
    assert all(g.is_connected() for g in graphs)


def test_enumeration_matches_labeled_oracle():
    """Independent route: enumerate all labeled graphs, keep the connected
    ones, deduplicate by canonical form."""
    for n in range(1, 6):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        seen = set()
        for mask in range(1 << len(pairs)):
            g = gc.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
            if g.is_connected():
                seen.add(gc.canonical_form(g))
        mine = {gc.canonical_form(g) for g in harness.enumerate_connected(n).graphs}
        assert mine == seen


def test_enumeration_matches_external_atlas(fixtures_dir):
    """The networkx atlas fixtures describe the same isomorphism classes."""
    for n in range(1, 7):
        text = (fixtures_dir / f"connected_n{n}.g6").read_text()
        external = {
            gc.canonical_form(d.graph) for d in fio.read_graph6_lines(text)
        }
        mine = {gc.canonical_form(g) for g in harness.enumerate_connected(n).graphs}
        assert mine == external


def test_enumerate_all_counts():
    for n, count in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)]:
        assert len(harness.enumerate_all(n).graphs) == count


def test_enumeration_cap():
    with pytest.raises(TooLarge):
        harness.enumerate_connected(9)


def test_union_pairs_cap():
    graphs = harness.corpus_up_to(3).graphs  # sizes 1, 2, 3, 3
    unions = harness.union_pairs(graphs, total_cap=4)
    assert all(u.n <= 4 for u in unions)
    # pairs: (1,1) (1,2) (1,3)x2 (2,2) = 5
    assert len(unions) == 5


def test_verify_theorem_small():
    rep = harness.verify_theorem(
        harness.corpus_up_to(4).graphs, chars=(0, 2), include_unions=True, union_total_cap=6
    )
    assert rep.passed and not rep.skips
    assert rep.checked > len(harness.corpus_up_to(4).graphs)


def test_verify_theorem_records_cap_skips():
    rep = harness.verify_theorem(
        [cycle(5)], chars=(0,), include_unions=False, oracle_cap=4
    )
    assert rep.skips == ("Dhc",)
    assert rep.passed  # skips are surfaced separately from violations


def test_verify_theorem_parallel_matches_serial():
    graphs = harness.corpus_up_to(4).graphs
    serial = harness.verify_theorem(graphs, chars=(0,), include_unions=False)
    parallel = harness.verify_theorem(graphs, chars=(0,), include_unions=False, workers=2)
    assert serial.violations == parallel.violations
    assert serial.checked == parallel.checked


def test_lemma_suite_small(corpus5):
    reports = harness.verify_lemma_suite(
        corpus5, ["UB", "FL1", "FL2", "FL3", "C1", "C1a", "C2", "CaWa", "Squeeze"]
    )
    assert all(rep.passed for rep in reports)
    assert [rep.property_name for rep in reports][0] == "UB"


def test_lemma_comp_on_unions(corpus5):
    (rep,) = harness.verify_lemma_suite(corpus5, ["Comp"], union_total_cap=8)
    assert rep.passed
    assert rep.checked > 0


def test_unknown_lemma_tag(corpus5):
    with pytest.raises(UnknownProperty):
        harness.verify_lemma_suite(corpus5, ["FL9"])


def test_corpus_from_graph6(fixtures_dir):
    text = (fixtures_dir / "connected_n5.g6").read_text()
    corpus = harness.corpus_from_graph6(text)
    assert len(corpus.graphs) == 21
    assert corpus.n_range == (5, 5)


def test_sweep_reports_are_deterministic(corpus5):
    a = harness.verify_theorem(corpus5, chars=(0,), include_unions=False)
    b = harness.verify_theorem(corpus5, chars=(0,), include_unions=False)
    assert a.violations == b.violations and a.checked == b.checked
