"""Vertex connectivity, separations, weak/quasi 4-connectivity and paws."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, FrozenSet, List, Optional, Tuple

from .graph import Graph, bits, line_graph


@dataclass(frozen=True)
class Separation:
    """A separation (G1, G2) with cut S = V(G1) & V(G2).

    ``side_a``/``side_b`` are the vertices of G1 and G2 outside the cut.
    ``edge_assignment`` maps each edge inside the cut to "a" or "b"; it
    may be empty when the assignment is left unresolved.
    """

    cut: FrozenSet[int]
    side_a: FrozenSet[int]
    side_b: FrozenSet[int]
    edge_assignment: Dict[Tuple[int, int], str] = field(default_factory=dict, compare=False, hash=False)

    @property
    def order(self) -> int:
        return len(self.cut)

    def edge_counts(self, g: Graph) -> Tuple[int, int]:
        """(||G1||, ||G2||) under the stored edge assignment."""
        a = b = 0
        for u, v in g.edges():
            if u in self.side_a or v in self.side_a:
                a += 1
            elif u in self.side_b or v in self.side_b:
                b += 1
            elif self.edge_assignment.get((u, v)) == "a":
                a += 1
            elif self.edge_assignment.get((u, v)) == "b":
                b += 1
        return a, b

    def vertex_counts(self) -> Tuple[int, int]:
        return len(self.side_a) + len(self.cut), len(self.side_b) + len(self.cut)

    def __str__(self):
        def fmt(s):
            return "{" + ",".join(str(v) for v in sorted(s)) + "}"

        return f"cut {fmt(self.cut)} sideA {fmt(self.side_a)} sideB {fmt(self.side_b)}"


def check_separation(g: Graph, sep: Separation) -> List[str]:
    """Independent check of the Separation invariants; returns problems found."""
    problems = []
    allv = set(range(g.n))
    s, a, b = set(sep.cut), set(sep.side_a), set(sep.side_b)
    if s & a or s & b or a & b:
        problems.append("cut and sides are not pairwise disjoint")
    if s | a | b != allv:
        problems.append("cut and sides do not cover V")
    if not a or not b:
        problems.append("a side is empty")
    for u, v in g.edges():
        if (u in a and v in b) or (u in b and v in a):
            problems.append(f"edge ({u}, {v}) joins the two sides")
    for e, tag in sep.edge_assignment.items():
        if tag not in ("a", "b") or not (e[0] in s and e[1] in s) or not g.has_edge(*e):
            problems.append(f"bad edge assignment {e}->{tag}")
    return problems


# -- local connectivity ---------------------------------------------------

def _disjoint_paths(g: Graph, s: int, t: int, limit: int) -> Tuple[int, Optional[int]]:
    """Number of internally disjoint s-t paths (s, t nonadjacent), capped at ``limit``.

    Classic augmenting paths on the split digraph: vertex v becomes
    v_in = 2v, v_out = 2v+1 with a unit arc between them. When fewer than
    ``limit`` paths exist the mask of vertices reachable from s in the
    final residual graph is returned as well (used to extract a min cut).
    """
    n = g.n
    size = 2 * n
    # capacity on arcs stored as residual dict-of-dicts (tiny graphs)
    res: List[Dict[int, int]] = [dict() for _ in range(size)]
    big = n + 1
    for v in range(n):
        if v != s and v != t:
            res[2 * v][2 * v + 1] = 1
            res[2 * v + 1].setdefault(2 * v, 0)
        for u in bits(g.adj[v]):
            res[2 * v + 1][2 * u] = big
            res[2 * u].setdefault(2 * v + 1, 0)
    src, dst = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        prev = {src: -1}
        dq = deque([src])
        while dq and dst not in prev:
            x = dq.popleft()
            for y, cap in res[x].items():
                if cap > 0 and y not in prev:
                    prev[y] = x
                    dq.append(y)
        if dst not in prev:
            # vertices whose out-node is reachable from s
            reach = 0
            for node in prev:
                if node % 2 == 1:
                    reach |= 1 << (node // 2)
            return flow, reach
        y = dst
        while prev[y] != -1:
            x = prev[y]
            res[x][y] -= 1
            res[y][x] = res[y].get(x, 0) + 1
            y = x
        flow += 1
    return flow, None


def local_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally vertex-disjoint s-t paths for nonadjacent s, t."""
    return _disjoint_paths(g, s, t, g.n)[0]


def _flow_separator(g: Graph, k: int) -> Optional[int]:
    """A vertex cut of size < k as a mask, found by Menger, or None.

    Any separator of size < k misses one of the first k vertices, which
    then has a nonadjacent partner on the other side; so it is enough to
    run flows from those k vertices.
    """
    for s in range(min(k, g.n)):
        for t in range(g.n):
            if t == s or g.adj[s] >> t & 1:
                continue
            flow, reach = _disjoint_paths(g, s, t, k)
            if flow < k:
                # vertices whose in-node is reachable but out-node is not form the cut
                cut = 0
                for v in range(g.n):
                    if v in (s, t):
                        continue
                    if not reach >> v & 1 and _in_reachable(g, reach, v):
                        cut |= 1 << v
                return cut
    return None


def _in_reachable(g: Graph, reach: int, v: int) -> bool:
    # v_in is reachable iff some out-node of a neighbour is reachable
    return bool(g.adj[v] & reach)


def _brute_separator(g: Graph, k: int) -> Optional[int]:
    for size in range(k):
        for cut in combinations(range(g.n), size):
            mask = 0
            for v in cut:
                mask |= 1 << v
            if g.n - size >= 2 and len(g.components(mask)) >= 2:
                return mask
    return None


def is_k_connected(g: Graph, k: int, brute: bool = False) -> bool:
    """True iff |G| > k and G has no vertex cut of fewer than k vertices.

    ``brute=True`` enumerates all vertex subsets of size < k instead of
    running flows; it exists as an independent cross-check.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n <= k:
        return False
    if brute:
        return _brute_separator(g, k) is None
    if not g.is_connected():
        return False
    if g.min_degree() < k:
        return False
    return _flow_separator(g, k) is None


def separation_from_cut(g: Graph, cut_mask: int) -> Separation:
    """Split the components of G - cut into first component vs the rest."""
    comps = g.components(cut_mask)
    if len(comps) < 2:
        raise ValueError("vertex set is not a cut")
    a = comps[0]
    b = 0
    for c in comps[1:]:
        b |= c
    return Separation(frozenset(bits(cut_mask)), frozenset(bits(a)), frozenset(bits(b)))


def find_separation_below(g: Graph, k: int) -> Optional[Separation]:
    """A separation of order < k, or None if G is k-connected.

    Requires |G| > k.
    """
    if g.n <= k:
        raise ValueError(f"need more than {k} vertices, graph has {g.n}")
    comps = g.components()
    if len(comps) > 1:
        return separation_from_cut(g, 0)
    if g.min_degree() < k:
        v = min(range(g.n), key=lambda x: (g.degree(x), x))
        return separation_from_cut(g, g.adj[v])
    cut = _flow_separator(g, k)
    if cut is None:
        return None
    return separation_from_cut(g, cut)


# -- 3-separations ---------------------------------------------------------

def _groupings(comps: List[int]):
    """Nontrivial bipartitions of a component list, as (mask_a, mask_b)."""
    c = len(comps)
    # fix the last component on side b to avoid listing mirror images
    for sel in range(1, 1 << (c - 1)):
        a = b = 0
        for i, comp in enumerate(comps):
            if i < c - 1 and sel >> i & 1:
                a |= comp
            else:
                b |= comp
        yield a, b


def enumerate_3_separations(g: Graph) -> List[Separation]:
    """All 3-separations, one per (cut, grouping of components).

    Edge assignments inside the cut are left unresolved.
    """
    out = []
    for cut in combinations(range(g.n), 3):
        mask = (1 << cut[0]) | (1 << cut[1]) | (1 << cut[2])
        comps = g.components(mask)
        if len(comps) < 2:
            continue
        for a, b in _groupings(comps):
            out.append(Separation(frozenset(cut), frozenset(bits(a)), frozenset(bits(b))))
    return out


def _edge_count_within(g: Graph, side: int, cut: int) -> int:
    # edges with at least one end in ``side``, other end in side or cut
    total = 0
    for v in bits(side):
        total += bin(g.adj[v] & side).count("1") + 2 * bin(g.adj[v] & cut).count("1")
    return total // 2


def _cut_edges(g: Graph, cut: Tuple[int, ...]) -> List[Tuple[int, int]]:
    return [(u, v) for u, v in combinations(cut, 2) if g.adj[u] >> v & 1]


def _balanced_assignment(g: Graph, sep: Separation) -> Tuple[Separation, int]:
    """The cut-edge assignment maximising min(||G1||, ||G2||)."""
    cut = sorted(sep.cut)
    cmask = sum(1 << v for v in cut)
    amask = sum(1 << v for v in sep.side_a)
    bmask = sum(1 << v for v in sep.side_b)
    ea = _edge_count_within(g, amask, cmask)
    eb = _edge_count_within(g, bmask, cmask)
    inner = _cut_edges(g, tuple(cut))
    best = None
    for tags in product("ab", repeat=len(inner)):
        na = ea + tags.count("a")
        nb = eb + tags.count("b")
        score = min(na, nb)
        if best is None or score > best[0]:
            best = (score, dict(zip(inner, tags)))
    sep2 = Separation(sep.cut, sep.side_a, sep.side_b, best[1])
    return sep2, best[0]


def weak_violation(g: Graph) -> Optional[Separation]:
    """A 3-separation with both sides having at least 5 edges, if any."""
    for sep in enumerate_3_separations(g):
        resolved, score = _balanced_assignment(g, sep)
        if score >= 5:
            return resolved
    return None


def quasi_violation(g: Graph) -> Optional[Separation]:
    """A 3-separation with both sides having at least 5 vertices, if any."""
    for cut in combinations(range(g.n), 3):
        mask = (1 << cut[0]) | (1 << cut[1]) | (1 << cut[2])
        comps = g.components(mask)
        if len(comps) < 2:
            continue
        for a, b in _groupings(comps):
            if bin(a).count("1") >= 2 and bin(b).count("1") >= 2:
                return Separation(frozenset(cut), frozenset(bits(a)), frozenset(bits(b)))
    return None


def is_weakly_4_connected(g: Graph) -> bool:
    return is_k_connected(g, 3) and weak_violation(g) is None


def is_quasi_4_connected(g: Graph) -> bool:
    return is_k_connected(g, 3) and quasi_violation(g) is None


def is_internally_4c_cubic(q: Graph) -> bool:
    """Cubic, at least six vertices, and the line graph is 4-connected."""
    if q.n < 6 or not q.is_regular(3):
        return False
    return is_k_connected(line_graph(q), 4)


# -- paws ------------------------------------------------------------------

@dataclass(frozen=True)
class Paw:
    """Edges wx, xy, xz, yz with d(x) = 3."""

    w: int
    x: int
    y: int
    z: int

    def edges(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset(
            (min(a, b), max(a, b))
            for a, b in ((self.w, self.x), (self.x, self.y), (self.x, self.z), (self.y, self.z))
        )


def find_paws(g: Graph) -> List[Paw]:
    """All paws, each listed once with y < z, sorted by (x, w, y)."""
    out = []
    for x in range(g.n):
        if g.degree(x) != 3:
            continue
        nb = g.neighbors(x)
        for w in nb:
            y, z = [v for v in nb if v != w]
            if g.adj[y] >> z & 1:
                out.append(Paw(w, x, y, z))
    out.sort(key=lambda p: (p.x, p.w, min(p.y, p.z)))
    return out


def triangles_at(g: Graph, v: int) -> int:
    """Number of triangles containing vertex v."""
    nb = g.adj[v]
    return sum(bin(g.adj[u] & nb).count("1") for u in bits(nb)) // 2
