"""Canonical labelling by partition refinement and individualisation.

The search follows the usual nauty scheme without node invariants: refine
to an equitable ordered partition, branch on the first non-singleton
cell, and keep the leaf whose relabelled adjacency is largest. Leaves that
reproduce an earlier certificate yield automorphisms, which prune sibling
branches lying in one orbit of the prefix stabiliser.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .graph import Graph, bits
from . import graph6

Cert = Tuple[int, ...]


def _refine(adj: Sequence[int], cells: List[List[int]], splitters: Optional[List[int]] = None) -> List[List[int]]:
    """Refine an ordered partition to the coarsest equitable refinement.

    Splitting a cell orders the fragments by neighbour count into the
    splitter, which keeps the result isomorphism invariant.
    """
    cells = [list(c) for c in cells]
    queue = list(range(len(cells))) if splitters is None else list(splitters)
    queued = set(queue)
    while queue:
        si = queue.pop(0)
        queued.discard(si)
        if si >= len(cells):
            continue
        smask = 0
        for v in cells[si]:
            smask |= 1 << v
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) == 1:
                i += 1
                continue
            counts: Dict[int, List[int]] = {}
            for v in cell:
                counts.setdefault(bin(adj[v] & smask).count("1"), []).append(v)
            if len(counts) == 1:
                i += 1
                continue
            frags = [counts[c] for c in sorted(counts)]
            cells[i:i + 1] = frags
            # indices after i shift; re-queue conservatively
            shift = len(frags) - 1
            queue = [q + shift if q > i else q for q in queue]
            queued = set(queue)
            for j in range(i, i + len(frags)):
                if j not in queued:
                    queue.append(j)
                    queued.add(j)
            i += len(frags)
    return cells


def _individualise(cells: List[List[int]], ci: int, v: int) -> List[List[int]]:
    cell = cells[ci]
    rest = [u for u in cell if u != v]
    return cells[:ci] + [[v], rest] + cells[ci + 1:]


def _certificate(adj: Sequence[int], order: Sequence[int]) -> Cert:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        r = 0
        for u in bits(adj[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return tuple(rows)


class _Search:
    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.n
        self.first: Optional[Tuple[Cert, List[int]]] = None
        self.best: Optional[Tuple[Cert, List[int]]] = None
        self.gens: List[List[int]] = []

    def run(self) -> None:
        degs = {}
        for v in range(self.n):
            degs.setdefault(bin(self.adj[v]).count("1"), []).append(v)
        cells = [degs[d] for d in sorted(degs)]
        self._node(_refine(self.adj, cells), [])

    def _leaf(self, cells: List[List[int]]) -> None:
        order = [c[0] for c in cells]
        cert = _certificate(self.adj, order)
        if self.first is None:
            self.first = (cert, order)
            self.best = (cert, order)
            return
        for ref_cert, ref_order in (self.first, self.best):
            if cert == ref_cert:
                # ref_order[i] -> order[i] is an automorphism
                perm = [0] * self.n
                for a, b in zip(ref_order, order):
                    perm[a] = b
                if perm != list(range(self.n)):
                    self.gens.append(perm)
                return
        if cert > self.best[0]:
            self.best = (cert, order)

    def _orbit_roots(self, prefix: List[int]) -> List[int]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for perm in self.gens:
            if all(perm[p] == p for p in prefix):
                for a in range(self.n):
                    ra, rb = find(a), find(perm[a])
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
        return [find(x) for x in range(self.n)]

    def _node(self, cells: List[List[int]], prefix: List[int]) -> None:
        ci = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if ci is None:
            self._leaf(cells)
            return
        tried_roots = set()
        for v in cells[ci]:
            if tried_roots:
                roots = self._orbit_roots(prefix)
                if roots[v] in {roots[t] for t in tried_roots}:
                    continue
            tried_roots.add(v)
            child = _refine(self.adj, _individualise(cells, ci, v), [ci, ci + 1])
            self._node(child, prefix + [v])


def canonical_labeling(g: Graph) -> List[int]:
    """Permutation ``perm`` (vertex -> new index) giving the canonical graph."""
    if g.n == 0:
        return []
    s = _Search(g)
    s.run()
    order = s.best[1]
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return perm


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def canonical_form(g: Graph) -> str:
    """graph6 string of the canonically relabelled graph."""
    return graph6.encode(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
