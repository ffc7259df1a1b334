import pytest

from chainthm import families as fam
from chainthm.canon import canonical_form
from chainthm.chains import TheoremId
from chainthm.connectivity import is_k_connected, is_quasi_4_connected
from chainthm.enumeration import (
    BoundExceeded,
    VerificationReport,
    brute_force_classes,
    class_by_enumeration,
    enumerate_graphs,
    generate_from_base,
    has_paw_partition,
    verify_lemma,
    verify_theorem,
    write_catalog,
)
from chainthm.graph import complete_graph

# numbers of unlabelled graphs, and of 3- and 4-connected ones, on n vertices
ALL_GRAPHS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
THREE_CONNECTED = {4: 1, 5: 3, 6: 17, 7: 136}
FOUR_CONNECTED = {5: 1, 6: 4, 7: 25}


def test_counts_all_graphs():
    for n, count in ALL_GRAPHS.items():
        assert len(enumerate_graphs(n)) == count


def test_connected_class_counts():
    for n, count in THREE_CONNECTED.items():
        assert len(enumerate_graphs(n, lambda g: is_k_connected(g, 3), min_degree=3)) == count
    for n, count in FOUR_CONNECTED.items():
        assert len(enumerate_graphs(n, lambda g: is_k_connected(g, 4), min_degree=4)) == count


def test_generator_matches_brute_force_oracle():
    for n in range(1, 7):
        got = sorted(canonical_form(g) for g in enumerate_graphs(n))
        want = sorted(canonical_form(g) for g in brute_force_classes(n))
        assert got == want


def test_min_degree_pruning_is_exact():
    for n in range(4, 8):
        for d in (2, 3, 4):
            pruned = {canonical_form(g) for g in enumerate_graphs(n, min_degree=d)}
            full = {canonical_form(g) for g in enumerate_graphs(n) if g.min_degree() >= d}
            assert pruned == full


def test_small_examples():
    assert enumerate_graphs(4, lambda g: is_k_connected(g, 3)) == [complete_graph(4)]
    q7 = {canonical_form(g) for g in enumerate_graphs(7, is_quasi_4_connected, min_degree=3)}
    assert canonical_form(fam.pyramid()) in q7 and canonical_form(fam.kite()) in q7


def test_output_sorted_and_canonical():
    graphs = enumerate_graphs(6)
    forms = [canonical_form(g) for g in graphs]
    assert forms == sorted(forms)
    from chainthm.graph6 import encode

    assert [encode(g) for g in graphs] == forms


def test_bounds():
    with pytest.raises(BoundExceeded):
        enumerate_graphs(10)
    with pytest.raises(BoundExceeded):
        brute_force_classes(7)
    with pytest.raises(BoundExceeded):
        verify_theorem(TheoremId.Quasi4, 10)


def test_report_text():
    rep = VerificationReport("x", (1, 3), {"b": 2, "a": 1})
    text = rep.to_text(timing=False)
    assert text.splitlines() == ["id x", "n_min 1", "n_max 3", "count.a 1", "count.b 2",
                                 "violations 0", "result pass"]
    rep.violations.append("C~ boom")
    assert not rep.passed and "violation C~ boom" in rep.to_text()


def test_verify_theorem_small():
    rep = verify_theorem(TheoremId.TuttePlus, 7)
    assert rep.passed
    # frozen from an exhaustive run
    assert rep.counts["eligible"] == 153
    assert rep.counts["in_class"] == sum(THREE_CONNECTED.values())


def test_verify_theorem_worker_pool_deterministic():
    a = verify_theorem(TheoremId.FourConn, 7, workers=1)
    b = verify_theorem(TheoremId.FourConn, 7, workers=2)
    assert a.to_text(timing=False) == b.to_text(timing=False)


def test_verify_lemma_unknown():
    with pytest.raises(ValueError):
        verify_lemma("nope", 5)


def test_lemma_reports_small():
    for lid in ("split", "side", "q4c-iff-vertexbound"):
        assert verify_lemma(lid, 6).passed


def test_paw_partition():
    assert has_paw_partition(fam.pyramid())
    assert not has_paw_partition(fam.kite())


def test_generation_small():
    for t in TheoremId:
        got = {canonical_form(g) for g in generate_from_base(t, 6)}
        want = {canonical_form(g) for g in class_by_enumeration(t, 6)}
        assert got == want
    with pytest.raises(ValueError):
        generate_from_base(TheoremId.Weak4, 6, "degree-only")


def test_catalog_sorted(tmp_path):
    p = tmp_path / "cat.g6"
    write_catalog(p, [fam.pyramid(), complete_graph(4), fam.kite()])
    lines = p.read_text().split()
    assert lines == sorted(lines) and len(lines) == 3
