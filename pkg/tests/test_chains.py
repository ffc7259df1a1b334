import pytest

from chainthm import families as fam
from chainthm.canon import canonical_form, is_isomorphic
from chainthm.chains import (
    Chain,
    ChainError,
    ChainStep,
    IneligibleInput,
    SpanningTargetMissing,
    TheoremId,
    find_chain,
    is_target,
    read_chain,
    seven_vertex_endgame,
    step_candidates,
    verify_chain,
)
from chainthm.connectivity import is_quasi_4_connected, is_weakly_4_connected
from chainthm.graph import add_edge, complete_graph, complete_multipartite, contract, delete_edge, make_graph
from chainthm.operations import disjoint_splits, split_vertex
from chainthm.planarity import is_planar

K1222 = complete_multipartite(1, 2, 2, 2)


def test_theorem_parse():
    assert TheoremId.parse("q4c") is TheoremId.Quasi4
    assert TheoremId.parse("tutte+") is TheoremId.TuttePlus
    with pytest.raises(ValueError):
        TheoremId.parse("5c")


def test_step_candidates_k1222():
    steps = step_candidates(K1222, TheoremId.FourConn)
    assert steps
    kinds = [s.kind for s in steps]
    assert kinds == sorted(kinds, key=["del", "con", "o1"].index)


def test_step_candidates_preconditions():
    with pytest.raises(IneligibleInput):
        step_candidates(fam.pyramid(), TheoremId.Quasi4)
    with pytest.raises(IneligibleInput):
        find_chain(fam.wheel(6), TheoremId.TuttePlus)


def test_chain_k1222_ends_at_axle_biwheel():
    assert not is_planar(K1222)
    c = find_chain(K1222, TheoremId.FourConn)
    assert is_isomorphic(c.terminal, fam.biwheel(4, True))
    assert verify_chain(c).ok


def test_target_is_length_zero():
    c = find_chain(fam.pyramid(), TheoremId.Quasi4)
    assert len(c) == 0 and verify_chain(c).ok
    assert len(find_chain(fam.kite(), TheoremId.Quasi4)) == 0


def test_ineligible_inputs():
    with pytest.raises(IneligibleInput):
        find_chain(fam.biwheel(5), TheoremId.FourConn)
    with pytest.raises(IneligibleInput):
        find_chain(fam.wheel(4), TheoremId.TuttePlus)
    with pytest.raises(IneligibleInput):
        find_chain(fam.ladder(4), TheoremId.Quasi4)
    with pytest.raises(IneligibleInput):
        find_chain(fam.wheel(5), TheoremId.Weak4)


def test_tutte_steps_drop_one_edge():
    c = find_chain(complete_graph(6), TheoremId.TuttePlus)
    assert all(a.m - b.m == 1 for a, b in zip(c.graphs, c.graphs[1:]))
    assert canonical_form(c.terminal) == canonical_form(fam.wheel(4))


def test_seven_vertex_endgame():
    assert len(seven_vertex_endgame(fam.pyramid())) == 0
    k = fam.kite()
    for e in k.non_edges():
        g = add_edge(k, *e)
        if is_quasi_4_connected(g) and not is_planar(g):
            c = seven_vertex_endgame(g)
            assert len(c) == 1 and c.steps[0].verts == e
            assert is_target(c.terminal, TheoremId.Quasi4)
            break
    else:
        pytest.fail("no kite-plus-edge example")


def test_endgame_missing_target():
    with pytest.raises(SpanningTargetMissing):
        seven_vertex_endgame(make_graph(7, [(i, (i + 1) % 7) for i in range(7)]))
    with pytest.raises(ValueError):
        seven_vertex_endgame(complete_graph(6))


def test_k6_contraction_case():
    # graphs with G/e = K6 have a weakly 4-connected single-edge deletion
    k6 = complete_graph(6)
    found = 0
    for a, b in disjoint_splits(k6, 5, 2):
        g = split_vertex(k6, 5, a, b)
        if not is_weakly_4_connected(g):
            continue
        found += 1
        assert any(is_weakly_4_connected(delete_edge(g, *e)) for e in g.edges())
    assert found


def test_verify_chain_detects_flipped_edge():
    c = find_chain(K1222, TheoremId.FourConn)
    g1 = c.graphs[1]
    u, v = g1.non_edges()[0]
    bad = add_edge(g1, u, v)
    c.graphs[1] = bad
    rep = verify_chain(c)
    assert any("replay" in v for v in rep.violations)


def test_verify_chain_side_condition():
    # a nonplanar 4-connected graph one deletion away from B5
    g = make_graph(7, [(0, 3), (0, 4), (0, 5), (0, 6), (1, 2), (1, 4), (1, 5), (1, 6), (2, 3),
                       (2, 5), (2, 6), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6)])
    assert not is_planar(g)
    h = delete_edge(g, 3, 4)
    assert is_isomorphic(h, fam.biwheel(5))
    c = Chain(TheoremId.FourConn, [g, h], [ChainStep("del", (3, 4), h)])
    rep = verify_chain(c)
    assert any("B4+" in v for v in rep.violations)
    assert any("planar" in v for v in rep.violations)


def test_verify_chain_wrong_kind():
    g = K1222
    h = contract(g, 0, 1)
    c = Chain(TheoremId.TuttePlus, [g, h], [ChainStep("o3", (0, 1, 2, 3), h)])
    assert not verify_chain(c).ok


def test_chain_text_round_trip():
    c = find_chain(K1222, TheoremId.FourConn)
    text = c.to_text()
    assert text.splitlines()[0] == "theorem 4c"
    back = read_chain(text)
    assert back.graphs == c.graphs and back.steps == c.steps
    assert verify_chain(back).ok


@pytest.mark.parametrize("text", [
    "g0 C~\n",
    "theorem 5c\ng0 C~\n",
    "theorem 4c\ng0 C~\ndel 0 -> Bw\n",
    "theorem 4c\ng0 C~\nzap 0 1 -> Bw\n",
    "theorem 4c\ng0 C~\ndel 0 x -> Bw\n",
])
def test_read_chain_rejects(text):
    with pytest.raises(ChainError):
        read_chain(text)


def test_quasi_chain_uses_endgame():
    # the cube plus a face diagonal is quasi 4-connected and not a ladder
    g = add_edge(fam.ladder(4), 0, 2)
    c = find_chain(g, TheoremId.Quasi4)
    assert any(h.n == 7 for h in c.graphs)
    assert verify_chain(c).ok
