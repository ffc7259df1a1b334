from itertools import combinations

import pytest

from chainthm import families as fam
from chainthm.canon import canonical_form, is_isomorphic
from chainthm.connectivity import is_weakly_4_connected
from chainthm.graph import GraphError, add_edge, complete_bipartite, contract, cycle_graph, make_graph
from chainthm.operations import (
    O1Witness,
    O2Witness,
    O3Witness,
    WitnessError,
    apply_O1,
    apply_O2,
    apply_O3,
    disjoint_splits,
    find_O1_sites,
    find_O2_sites,
    find_O3_sites,
    inverse_O1,
    inverse_O2,
    inverse_O3,
    o1_problem,
    split_vertex,
)

K33 = complete_bipartite(3, 3)
SAME_PART = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]


def split_hub_b6():
    # hub 6 of B6 split into two degree-4 vertices
    return split_vertex(fam.biwheel(6), 6, [0, 1, 2], [3, 4, 5])


def test_o1_sites():
    assert find_O1_sites(fam.squared_cycle(6)) == []
    assert find_O1_sites(cycle_graph(5)) == []
    g = split_hub_b6()
    sites = find_O1_sites(g)
    assert sites
    rim_sites = [w for w in sites if w.x < 6 and w.y < 6]
    assert rim_sites


def test_apply_o1():
    g = split_hub_b6()
    for w in find_O1_sites(g):
        h = apply_O1(g, w)
        assert (h.n, h.m) == (g.n - 1, g.m - 2)
        assert h.degree(min(w.x, w.y)) == 5
        # O1 is the contraction followed by one deletion
        assert h == contract(g, w.x, w.y)


def test_o1_both_orientations():
    sites = set(w.vertices() for w in find_O1_sites(split_hub_b6()))
    assert all((y, x, z) in sites for x, y, z in sites)


def test_o1_invalid_witness():
    with pytest.raises(WitnessError, match="only triangle"):
        apply_O1(fam.squared_cycle(6), O1Witness(0, 1, 2))
    assert o1_problem(fam.squared_cycle(6), O1Witness(0, 0, 1))


def test_o3_on_k33_configurations():
    two = set()
    three = set()
    for k, bucket in ((2, two), (3, three)):
        for es in combinations(SAME_PART, k):
            g = K33
            for e in es:
                g = add_edge(g, *e)
            for w in find_O3_sites(g):
                h = apply_O3(g, w)
                assert (h.n, h.m) == (g.n - 1, g.m - 2)
                bucket.add(canonical_form(h))
    assert two == {canonical_form(fam.biwheel(3))}
    assert three == {canonical_form(fam.biwheel(3, True))}


def test_o3_sites_absent_in_w4():
    assert find_O3_sites(fam.wheel(4)) == []


def test_inverse_o3_of_b3():
    pre = [g for g, _ in inverse_O3(fam.biwheel(3))]
    targets = set()
    for a, b in combinations(SAME_PART, 2):
        targets.add(canonical_form(add_edge(add_edge(K33, *a), *b)))
    assert any(canonical_form(g) in targets for g in pre)


@pytest.mark.parametrize("h", [fam.biwheel(3), fam.biwheel(3, True), fam.pyramid(), fam.kite(),
                               fam.biwheel(5), fam.squared_cycle(7), fam.ladder(4)], ids=str)
def test_inverse_round_trips(h):
    for inverse, apply in ((inverse_O1, apply_O1), (inverse_O2, apply_O2), (inverse_O3, apply_O3)):
        for g, w in inverse(h):
            assert apply(g, w) == h
            assert g.m == h.m + 2


def test_o2_example_configuration():
    # two paws sharing the degree-4 vertex z, closed up into a 3-connected graph
    w, x, y, z, w2, x2, y2 = range(7)
    g = make_graph(7, [(w, x), (x, y), (x, z), (y, z), (w2, x2), (x2, y2), (x2, z), (y2, z),
                       (w, y), (w, w2), (w, y2), (y, w2), (w2, y2)])
    site = O2Witness(w, x, y, z, w2, x2, y2)
    assert site in find_O2_sites(g)
    h = apply_O2(g, site)
    assert h.m == g.m - 2
    assert any(apply_O2(p, s) == h for p, s in inverse_O2(h))


def test_o2_pyramid_has_no_smaller_weak_result():
    for s in find_O2_sites(fam.pyramid()):
        assert not is_weakly_4_connected(apply_O2(fam.pyramid(), s))


def test_o2_invalid_witness():
    with pytest.raises(WitnessError):
        apply_O2(fam.pyramid(), O2Witness(0, 1, 2, 3, 4, 5, 6))


def test_o3_invalid_witness():
    with pytest.raises(WitnessError, match="xz and yz"):
        apply_O3(K33, O3Witness(0, 3, 4, 5))


def test_split_vertex():
    w5 = fam.wheel(5)
    g = split_vertex(w5, 5, [0, 1, 2], [2, 3, 4])
    assert contract(g, 5, 6) == w5
    with pytest.raises(GraphError):
        split_vertex(w5, 5, [0, 1], [3, 4])
    with pytest.raises(GraphError):
        split_vertex(w5, 5, [0, 1], [2, 3, 4], min_part=3)


def test_split_hub_of_b6():
    g = split_hub_b6()
    assert g.degree(6) == g.degree(8) == 4
    assert is_isomorphic(contract(g, 6, 8), fam.biwheel(6))


def test_disjoint_splits():
    splits = disjoint_splits(fam.wheel(6), 6, 2)
    assert all(len(a) >= 2 and len(b) >= 2 and not set(a) & set(b) for a, b in splits)
    # 2^6 ordered partitions minus those with a block smaller than two
    assert len(splits) == 64 - 2 * (1 + 6)
