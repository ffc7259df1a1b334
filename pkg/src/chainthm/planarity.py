"""Planarity: networkx's left-right test, plus a Kuratowski-minor oracle."""

from __future__ import annotations

from typing import Dict

import networkx as nx

from .canon import canonical_form
from .graph import Graph, complete_bipartite, complete_graph, contract, subgraph_embedding

K5 = complete_graph(5)
K33 = complete_bipartite(3, 3)


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def is_planar(g: Graph) -> bool:
    if g.n <= 4:
        return True
    if g.m > 3 * g.n - 6:
        return False
    return nx.check_planarity(to_networkx(g))[0]


def has_minor(g: Graph, h: Graph, _memo: Dict[str, bool] = None) -> bool:
    """Whether ``h`` is a minor of ``g``, by exhaustive vertex deletion/contraction.

    Edge deletions are postponed to a final spanning-subgraph test, which
    is valid because deleting an edge before a contraction only removes
    edges from the result. Exponential; meant for graphs of ten or so
    vertices.
    """
    if _memo is None:
        _memo = {}
    if g.n < h.n or g.m < h.m:
        return False
    if g.n == h.n:
        return subgraph_embedding(h, g) is not None
    key = canonical_form(g)
    if key in _memo:
        return _memo[key]
    found = False
    for v in range(g.n):
        if has_minor(g.delete_vertex(v), h, _memo):
            found = True
            break
    if not found:
        for u, v in g.edges():
            if has_minor(contract(g, u, v), h, _memo):
                found = True
                break
    _memo[key] = found
    return found


def is_planar_by_minors(g: Graph) -> bool:
    """Wagner's criterion: planar iff neither K5 nor K3,3 is a minor."""
    return not has_minor(g, K5) and not has_minor(g, K33)
