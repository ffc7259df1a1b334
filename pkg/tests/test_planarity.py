from chainthm import families as fam
from chainthm.graph import complete_bipartite, complete_graph, petersen_graph
from chainthm.planarity import K5, K33, has_minor, is_planar, is_planar_by_minors

from conftest import random_graph


def test_kuratowski_graphs():
    assert not is_planar(K5) and not is_planar(K33)
    assert is_planar(complete_graph(4))
    assert not is_planar_by_minors(K5) and not is_planar_by_minors(K33)


def test_petersen_has_k5_minor():
    assert has_minor(petersen_graph(), K5)
    assert not is_planar(petersen_graph())


def test_fast_test_agrees_with_minor_oracle(rng):
    for _ in range(120):
        g = random_graph(rng.randint(5, 8), rng.uniform(0.3, 0.8), rng)
        assert is_planar(g) == is_planar_by_minors(g)


def test_euler_bound(rng):
    for _ in range(200):
        g = random_graph(rng.randint(3, 10), rng.random(), rng)
        if is_planar(g):
            assert g.m <= 3 * g.n - 6


def test_biwheel_axle_planarity():
    assert is_planar_by_minors(fam.biwheel(6))
    assert not is_planar_by_minors(fam.biwheel(6, True))
    assert not is_planar(fam.ladder(5, True))
