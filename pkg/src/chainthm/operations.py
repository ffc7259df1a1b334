"""The reductions O1, O2, O3, their site enumeration, and the inverse moves.

Each reduction contracts an edge lying in exactly one triangle and drops
the resulting parallel edge, so the result is si(G/e) with the usual
renumbering (merged vertex at the smaller index). Inverses append new
vertices at index n, which makes apply(inverse(H)) == H exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from .graph import Graph, GraphError, bits, contract, make_graph


class WitnessError(GraphError):
    """The witness does not describe a valid site in the graph."""


@dataclass(frozen=True)
class O1Witness:
    x: int
    y: int
    z: int

    def vertices(self) -> Tuple[int, ...]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class O2Witness:
    w: int
    x: int
    y: int
    z: int
    w2: int
    x2: int
    y2: int

    def vertices(self) -> Tuple[int, ...]:
        return (self.w, self.x, self.y, self.z, self.w2, self.x2, self.y2)


@dataclass(frozen=True)
class O3Witness:
    w: int
    x: int
    y: int
    z: int

    def vertices(self) -> Tuple[int, ...]:
        return (self.w, self.x, self.y, self.z)


def _in_range(g: Graph, vs: Iterable[int]) -> bool:
    return all(0 <= v < g.n for v in vs)


# -- O1 ---------------------------------------------------------------------

def o1_problem(g: Graph, w: O1Witness) -> Optional[str]:
    x, y, z = w.x, w.y, w.z
    if not _in_range(g, (x, y, z)) or len({x, y, z}) != 3:
        return "vertices out of range or not distinct"
    if not g.has_edge(x, y):
        return "xy is not an edge"
    if g.degree(x) != 4 or g.degree(y) != 4:
        return "d(x) and d(y) must both be 4"
    if bits(g.adj[x] & g.adj[y]) != [z]:
        return "xyz is not the only triangle on xy"
    return None


def find_O1_sites(g: Graph) -> List[O1Witness]:
    out = []
    for x in range(g.n):
        if g.degree(x) != 4:
            continue
        for y in bits(g.adj[x]):
            if g.degree(y) != 4:
                continue
            common = g.adj[x] & g.adj[y]
            if bin(common).count("1") == 1:
                out.append(O1Witness(x, y, bits(common)[0]))
    return sorted(out, key=O1Witness.vertices)


def apply_O1(g: Graph, w: O1Witness) -> Graph:
    err = o1_problem(g, w)
    if err:
        raise WitnessError(f"invalid O1 witness {w.vertices()}: {err}")
    return contract(g, w.x, w.y)


def inverse_O1(h: Graph, v: Optional[int] = None) -> List[Tuple[Graph, O1Witness]]:
    """All G with O1(G) = H, splitting a degree-5 vertex (``v`` or every one).

    The split keeps index v for x and appends y at index n.
    """
    out = []
    verts = range(h.n) if v is None else [v]
    for e in verts:
        if h.degree(e) != 5:
            continue
        nbrs = bits(h.adj[e])
        for z in nbrs:
            rest = [u for u in nbrs if u != z]
            a = rest[0]
            for b in rest[1:]:
                part_x = [a, b]
                part_y = [u for u in rest if u not in part_x]
                g = split_vertex(h, e, part_x + [z], part_y + [z])
                out.append((g, O1Witness(e, h.n, z)))
    return out


# -- O2 ---------------------------------------------------------------------

def o2_problem(g: Graph, w: O2Witness) -> Optional[str]:
    vs = w.vertices()
    if not _in_range(g, vs) or len(set(vs)) != 7:
        return "vertices out of range or not distinct"
    adj = g.adj

    def nb(v):
        return set(bits(adj[v]))

    if nb(w.x) != {w.w, w.y, w.z}:
        return "N(x) must be {w, y, z}"
    if nb(w.x2) != {w.w2, w.y2, w.z}:
        return "N(x') must be {w', y', z}"
    if nb(w.z) != {w.x, w.y, w.x2, w.y2}:
        return "N(z) must be {x, y, x', y'}"
    return None


def find_O2_sites(g: Graph) -> List[O2Witness]:
    out = []
    adj = g.adj
    for z in range(g.n):
        if g.degree(z) != 4:
            continue
        nz = bits(adj[z])
        for x in nz:
            if g.degree(x) != 3:
                continue
            for y in bits(adj[x] & adj[z]):
                ws = bits(adj[x] & ~(1 << y) & ~(1 << z))
                if len(ws) != 1:
                    continue
                rest = [u for u in nz if u not in (x, y)]
                for x2, y2 in (rest, rest[::-1]):
                    if g.degree(x2) != 3 or not adj[x2] >> y2 & 1:
                        continue
                    w2s = bits(adj[x2] & ~(1 << y2) & ~(1 << z))
                    if len(w2s) != 1:
                        continue
                    wit = O2Witness(ws[0], x, y, z, w2s[0], x2, y2)
                    if o2_problem(g, wit) is None:
                        out.append(wit)
    return sorted(out, key=O2Witness.vertices)


def apply_O2(g: Graph, w: O2Witness) -> Graph:
    err = o2_problem(g, w)
    if err:
        raise WitnessError(f"invalid O2 witness {w.vertices()}: {err}")
    return contract(g, w.x, w.z)


def inverse_O2(h: Graph, v: Optional[int] = None) -> List[Tuple[Graph, O2Witness]]:
    """All G with O2(G) = H, uncontracting a degree-4 vertex (``v`` or every one).

    The merged vertex keeps its index as z; x is appended at index n.
    """
    out = []
    adj = h.adj
    verts = range(h.n) if v is None else [v]
    for z in verts:
        if h.degree(z) != 4:
            continue
        nz = bits(adj[z])
        for x2 in nz:
            if h.degree(x2) != 3:
                continue
            for y2 in bits(adj[x2] & adj[z]):
                w2s = bits(adj[x2] & ~(1 << y2) & ~(1 << z))
                if len(w2s) != 1 or adj[z] >> w2s[0] & 1:
                    continue
                w2 = w2s[0]
                rest = [u for u in nz if u not in (x2, y2)]
                for w, y in (rest, rest[::-1]):
                    x = h.n
                    es = [e for e in h.edges() if e != (min(z, w), max(z, w))]
                    es += [(w, x), (y, x), (z, x)]
                    g = make_graph(h.n + 1, es)
                    out.append((g, O2Witness(w, x, y, z, w2, x2, y2)))
    return out


# -- O3 ---------------------------------------------------------------------

def o3_problem(g: Graph, w: O3Witness) -> Optional[str]:
    vs = w.vertices()
    if not _in_range(g, vs) or len(set(vs)) != 4:
        return "vertices out of range or not distinct"
    if set(bits(g.adj[w.w])) != {w.x, w.y, w.z}:
        return "N(w) must be {x, y, z}"
    if not (g.has_edge(w.x, w.z) and g.has_edge(w.y, w.z)):
        return "xz and yz must be edges"
    if g.has_edge(w.x, w.y):
        return "xy must not be an edge"
    if g.degree(w.x) < 4 or g.degree(w.y) < 4 or g.degree(w.z) < 5:
        return "degree condition d(x), d(y) >= 4, d(z) >= 5 fails"
    return None


def find_O3_sites(g: Graph) -> List[O3Witness]:
    out = []
    for w in range(g.n):
        if g.degree(w) != 3:
            continue
        nw = bits(g.adj[w])
        for z in nw:
            x, y = [u for u in nw if u != z]
            for a, b in ((x, y), (y, x)):
                wit = O3Witness(w, a, b, z)
                if o3_problem(g, wit) is None:
                    out.append(wit)
    return sorted(out, key=O3Witness.vertices)


def apply_O3(g: Graph, w: O3Witness) -> Graph:
    err = o3_problem(g, w)
    if err:
        raise WitnessError(f"invalid O3 witness {w.vertices()}: {err}")
    return contract(g, w.x, w.w)


def inverse_O3(h: Graph, v: Optional[int] = None) -> List[Tuple[Graph, O3Witness]]:
    """All G with O3(G) = H, splitting a vertex of a triangle (``v`` or every one).

    The split vertex keeps its index as x; w is appended at index n.
    """
    out = []
    adj = h.adj
    verts = range(h.n) if v is None else [v]
    for x in verts:
        if h.degree(x) < 4:
            continue
        for y in bits(adj[x]):
            if h.degree(y) < 4:
                continue
            for z in bits(adj[x] & adj[y]):
                if h.degree(z) < 4:
                    continue
                w = h.n
                es = [e for e in h.edges() if e != (min(x, y), max(x, y))]
                es += [(x, w), (y, w), (z, w)]
                g = make_graph(h.n + 1, es)
                out.append((g, O3Witness(w, x, y, z)))
    return out


# -- generating moves -------------------------------------------------------

def split_vertex(g: Graph, v: int, part_a: Iterable[int], part_b: Iterable[int], min_part: int = 0) -> Graph:
    """Replace v by adjacent x (index v) and y (index n).

    N(x) = part_a + y and N(y) = part_b + x; shared neighbours are allowed
    and become triangles on xy. Contracting xy gives back ``g`` exactly.
    """
    a, b = set(part_a), set(part_b)
    if a | b != set(bits(g.adj[v])):
        raise GraphError(f"parts do not cover N({v})")
    if len(a) < min_part or len(b) < min_part:
        raise GraphError(f"split parts must have at least {min_part} vertices")
    y = g.n
    es = [e for e in g.edges() if v not in e]
    es += [(v, u) for u in a] + [(y, u) for u in b] + [(v, y)]
    return make_graph(g.n + 1, es)


def disjoint_splits(g: Graph, v: int, min_part: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Ordered partitions of N(v) into two blocks of size >= min_part.

    These are the splits whose new edge lies in no triangle, i.e. the
    inverses of single-edge contractions.
    """
    nbrs = bits(g.adj[v])
    out = []
    for r in range(min_part, len(nbrs) - min_part + 1):
        for a in combinations(nbrs, r):
            b = tuple(u for u in nbrs if u not in a)
            out.append((a, b))
    return out
