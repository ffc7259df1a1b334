from chainthm import families as fam
from chainthm.canon import canonical_form, canonical_graph, canonical_labeling, is_isomorphic
from chainthm.graph import complete_graph, make_graph, petersen_graph
from chainthm.graph6 import decode

from conftest import random_graph, shuffled


def test_invariant_under_relabelling(rng):
    for _ in range(200):
        g = random_graph(rng.randint(1, 9), rng.random(), rng)
        assert canonical_form(shuffled(g, rng)) == canonical_form(g)


def test_idempotent(rng):
    for _ in range(50):
        g = random_graph(8, 0.5, rng)
        c = canonical_graph(g)
        assert canonical_graph(c) == c
        assert decode(canonical_form(g)) == c


def test_labeling_is_permutation():
    perm = canonical_labeling(petersen_graph())
    assert sorted(perm) == list(range(10))


def test_prism_vs_k33_distinct():
    assert canonical_form(fam.ladder(3)) != canonical_form(fam.ladder(3, True))


def test_biwheel_axle_is_k5():
    assert canonical_form(fam.biwheel(3, True)) == canonical_form(complete_graph(5))


def test_regular_graphs_separate():
    # two 3-regular 8-vertex graphs: the cube and the Wagner graph
    wagner = make_graph(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])
    assert not is_isomorphic(fam.ladder(4), wagner)
    assert is_isomorphic(wagner, fam.ladder(4, True))


def test_highly_symmetric():
    assert is_isomorphic(shuffled(petersen_graph(), __import__("random").Random(1)), petersen_graph())
    assert canonical_graph(complete_graph(9)) == complete_graph(9)
