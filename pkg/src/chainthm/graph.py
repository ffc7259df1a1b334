"""Immutable simple graphs on vertices 0..n-1 with minor operations.

Adjacency is stored as one bitmask per vertex, so edge tests and
neighbourhood intersections are single integer operations.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

MAX_VERTICES = 64

Edge = Tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs or operations on absent edges."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> List[int]:
    """Indices of set bits of ``mask`` in ascending order."""
    return list(_bits(mask))


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph with value semantics.

    Two graphs compare equal iff they have the same vertex count and the
    same labelled edge set.
    """

    __slots__ = ("n", "adj", "_m")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0 or n > MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if len(adj) != n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in _bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_m", sum(bin(r).count("1") for r in adj) // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def _trusted(cls, n: int, adj: Sequence[int]) -> "Graph":
        # internal constructor for operations that preserve the invariants
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        object.__setattr__(g, "_m", sum(bin(r).count("1") for r in adj) // 2)
        return g

    def __reduce__(self):
        # pickling for worker processes; slots are read-only
        return (_rebuild, (self.n, self.adj))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __len__(self):
        return self.n

    @property
    def m(self) -> int:
        """Number of edges."""
        return self._m

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> List[int]:
        return [bin(r).count("1") for r in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def neighbors(self, v: int) -> List[int]:
        return bits(self.adj[v])

    def neighborhood(self, vertices: Iterable[int]) -> List[int]:
        """N(X): vertices outside X adjacent to some vertex of X."""
        xs = 0
        for v in vertices:
            xs |= 1 << v
        out = 0
        for v in _bits(xs):
            out |= self.adj[v]
        return bits(out & ~xs)

    def edges(self) -> List[Edge]:
        """All edges (u, v) with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> List[Edge]:
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.adj[u] >> v & 1]

    def is_regular(self, k: int) -> bool:
        return all(bin(r).count("1") == k for r in self.adj)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling is not a permutation")
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in _bits(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph._trusted(self.n, adj)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, vertex ``vertices[i]`` becoming ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            row = 0
            for u in _bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            adj.append(row)
        return Graph._trusted(len(vertices), adj)

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in range(self.n) if u != v])

    def components(self, removed: int = 0) -> List[int]:
        """Connected components of G minus the vertex mask ``removed``, as masks."""
        left = ((1 << self.n) - 1) & ~removed
        comps = []
        while left:
            seed = left & -left
            comp = seed
            frontier = seed
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                nxt &= left & ~comp
                comp |= nxt
                frontier = nxt
            comps.append(comp)
            left &= ~comp
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


def _rebuild(n: int, adj: Sequence[int]) -> Graph:
    return Graph._trusted(n, adj)


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from an edge list; duplicate pairs are merged."""
    if n < 0 or n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, adj)


def _require_edge(g: Graph, u: int, v: int) -> None:
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) is not in the graph")


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{g.n - 1}")
    if g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) already present")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph._trusted(g.n, adj)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    _require_edge(g, u, v)
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph._trusted(g.n, adj)


def triangles_containing(g: Graph, u: int, v: int) -> List[int]:
    """Third vertices z of all triangles uvz, ascending."""
    _require_edge(g, u, v)
    return bits(g.adj[u] & g.adj[v])


def contraction_map(n: int, u: int, v: int) -> List[int]:
    """Vertex renumbering used by contraction of uv.

    The merged vertex takes index min(u, v); indices above max(u, v)
    shift down by one.
    """
    lo, hi = norm_edge(u, v)
    out = []
    for w in range(n):
        if w == hi:
            out.append(lo)
        elif w > hi:
            out.append(w - 1)
        else:
            out.append(w)
    return out


def contract_simplify(g: Graph, u: int, v: int) -> Tuple[Graph, List[Edge]]:
    """si(G/uv) together with the collapsed parallel classes.

    Each triangle uvz leaves the pair of edges uz, vz parallel after the
    contraction; one of them is dropped. The returned list holds, per
    triangle, the dropped edge expressed in G's labelling as (hi, z)
    where hi = max(u, v) is the vertex that disappears.
    """
    _require_edge(g, u, v)
    lo, hi = norm_edge(u, v)
    removed = [norm_edge(hi, z) for z in _bits(g.adj[lo] & g.adj[hi])]
    mapping = contraction_map(g.n, lo, hi)
    adj = [0] * (g.n - 1)
    for w in range(g.n):
        a = mapping[w]
        for x in _bits(g.adj[w]):
            b = mapping[x]
            if a != b:
                adj[a] |= 1 << b
    return Graph._trusted(g.n - 1, adj), removed


def contract(g: Graph, u: int, v: int) -> Graph:
    return contract_simplify(g, u, v)[0]


def line_graph(q: Graph) -> Graph:
    """Vertices are the edges of ``q`` in sorted order."""
    es = q.edges()
    if not es:
        raise GraphError("line graph needs at least one edge")
    pairs = []
    for i, j in combinations(range(len(es)), 2):
        if set(es[i]) & set(es[j]):
            pairs.append((i, j))
    return make_graph(len(es), pairs)


def complete_graph(n: int) -> Graph:
    return make_graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complete_multipartite(*sizes: int) -> Graph:
    part = []
    for idx, s in enumerate(sizes):
        part.extend([idx] * s)
    n = len(part)
    return make_graph(n, [(i, j) for i, j in combinations(range(n), 2) if part[i] != part[j]])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(10, outer + spokes + inner)


def subgraph_embedding(pattern: Graph, host: Graph) -> Optional[List[int]]:
    """Injective map of pattern vertices into host preserving pattern edges.

    Not necessarily induced. Returns ``emb`` with ``emb[p]`` the host
    vertex for pattern vertex ``p``, or None. Plain backtracking with
    pattern vertices taken in a connectivity-first order.
    """
    if pattern.n > host.n or pattern.m > host.m:
        return None
    order: List[int] = []
    seen = 0
    while len(order) < pattern.n:
        # next: most already-placed neighbours, then highest degree
        best = max(
            (v for v in range(pattern.n) if not seen >> v & 1),
            key=lambda v: (bin(pattern.adj[v] & seen).count("1"), pattern.degree(v), -v),
        )
        order.append(best)
        seen |= 1 << best
    hdeg = host.degrees()
    pdeg = pattern.degrees()
    emb = [-1] * pattern.n
    used = 0

    def place(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        p = order[i]
        cand = ((1 << host.n) - 1) & ~used
        for q in _bits(pattern.adj[p]):
            if emb[q] >= 0:
                cand &= host.adj[emb[q]]
        for h in _bits(cand):
            if hdeg[h] < pdeg[p]:
                continue
            emb[p] = h
            used |= 1 << h
            if place(i + 1):
                return True
            used &= ~(1 << h)
            emb[p] = -1
        return False

    return list(emb) if place(0) else None
