"""Named graph families: constructors, recognisers, line-graph roots.

Labelling conventions for ``construct``:

* wheel W_n: rim 0..n-1 in cycle order, hub n;
* squared cycle C^2_n: vertices 0..n-1 in cycle order;
* biwheel B_n / B_n^+: rim 0..n-1, hubs n and n+1 (axle n~n+1 for B_n^+);
* ladder A_n / A_n': x_1..x_n = 0..n-1, y_1..y_n = n..2n-1;
* the sporadic graphs use the fixed edge lists below.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, List, Optional, Tuple

from .canon import canonical_form
from .connectivity import is_internally_4c_cubic, is_k_connected
from .graph import Graph, add_edge, bits, complete_bipartite, complete_graph, delete_edge, make_graph

WHEEL = "wheel"
SQUARED_CYCLE = "squared-cycle"
BIWHEEL = "biwheel"
LINE_OF_CUBIC = "line-of-cubic"
LADDER = "ladder"
PYRAMID = "pyramid"
KITE = "kite"
K6 = "K6"
K6_MINUS = "K6-minus"
K33_PLUS = "K33-plus"
SMALL_3C = "small-3-connected"

_TAG_ORDER = [WHEEL, SQUARED_CYCLE, BIWHEEL, LINE_OF_CUBIC, LADDER, PYRAMID, KITE, K6, K6_MINUS, K33_PLUS, SMALL_3C]


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyId:
    """A family tag with its parameters.

    ``n`` is the size parameter (wheel/squared cycle/biwheel/ladder), and
    ``flag`` is the axle for biwheels or the twist for ladders.
    """

    tag: str
    n: Optional[int] = None
    flag: bool = False

    def sort_key(self):
        return (_TAG_ORDER.index(self.tag), self.n or 0, self.flag)

    def __str__(self):
        if self.tag == BIWHEEL:
            return f"biwheel({self.n},axle)" if self.flag else f"biwheel({self.n})"
        if self.tag == LADDER:
            return f"ladder({self.n},twisted)" if self.flag else f"ladder({self.n})"
        if self.n is not None:
            return f"{self.tag}({self.n})"
        return self.tag


def Wheel(n: int) -> FamilyId:
    return FamilyId(WHEEL, n)


def SquaredCycle(n: int) -> FamilyId:
    return FamilyId(SQUARED_CYCLE, n)


def Biwheel(n: int, axle: bool = False) -> FamilyId:
    return FamilyId(BIWHEEL, n, axle)


def LadderA(n: int, twisted: bool = False) -> FamilyId:
    return FamilyId(LADDER, n, twisted)


LineOfCubic = FamilyId(LINE_OF_CUBIC)
Pyramid = FamilyId(PYRAMID)
Kite = FamilyId(KITE)
K6Id = FamilyId(K6)
K6MinusId = FamilyId(K6_MINUS)
K33PlusId = FamilyId(K33_PLUS)
Small3Connected = FamilyId(SMALL_3C)


# -- constructors -----------------------------------------------------------

PYRAMID_EDGES = [
    (0, 1), (1, 2), (0, 2),          # central triangle
    (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0),
    (6, 3), (6, 4), (6, 5),          # apex
]

KITE_EDGES = [
    (0, 1), (0, 2), (0, 3), (0, 5), (1, 2), (1, 4),
    (1, 5), (2, 6), (3, 4), (3, 6), (4, 5), (5, 6),
]


def wheel(n: int) -> Graph:
    if n < 3:
        raise FamilyError("wheel needs n >= 3")
    rim = [(i, (i + 1) % n) for i in range(n)]
    return make_graph(n + 1, rim + [(i, n) for i in range(n)])


def squared_cycle(n: int) -> Graph:
    if n < 5:
        raise FamilyError("squared cycle needs n >= 5")
    return make_graph(n, [(i, (i + d) % n) for i in range(n) for d in (1, 2)])


def biwheel(n: int, axle: bool = False) -> Graph:
    if n < 3:
        raise FamilyError("biwheel needs n >= 3")
    es = [(i, (i + 1) % n) for i in range(n)]
    es += [(i, h) for i in range(n) for h in (n, n + 1)]
    if axle:
        es.append((n, n + 1))
    return make_graph(n + 2, es)


def ladder(n: int, twisted: bool = False) -> Graph:
    if n < 3:
        raise FamilyError("ladder needs n >= 3")
    x = list(range(n))
    y = list(range(n, 2 * n))
    es = [(x[i], x[i + 1]) for i in range(n - 1)] + [(y[i], y[i + 1]) for i in range(n - 1)]
    es += [(x[i], y[i]) for i in range(n)]
    es += [(x[0], y[-1]), (y[0], x[-1])] if twisted else [(x[0], x[-1]), (y[0], y[-1])]
    return make_graph(2 * n, es)


def pyramid() -> Graph:
    return make_graph(7, PYRAMID_EDGES)


def kite() -> Graph:
    return make_graph(7, KITE_EDGES)


def k6_minus() -> Graph:
    return delete_edge(complete_graph(6), 0, 1)


def k33_plus() -> Graph:
    return add_edge(complete_bipartite(3, 3), 0, 1)


def construct(fid: FamilyId) -> Graph:
    if fid.tag == WHEEL:
        return wheel(fid.n)
    if fid.tag == SQUARED_CYCLE:
        return squared_cycle(fid.n)
    if fid.tag == BIWHEEL:
        return biwheel(fid.n, fid.flag)
    if fid.tag == LADDER:
        return ladder(fid.n, fid.flag)
    if fid.tag == PYRAMID:
        return pyramid()
    if fid.tag == KITE:
        return kite()
    if fid.tag == K6:
        return complete_graph(6)
    if fid.tag == K6_MINUS:
        return k6_minus()
    if fid.tag == K33_PLUS:
        return k33_plus()
    raise FamilyError(f"{fid} has no single canonical member")


# -- recognisers ------------------------------------------------------------

def _is_cycle(g: Graph, mask: int) -> bool:
    """Whether the subgraph induced by ``mask`` is a single cycle."""
    vs = bits(mask)
    if len(vs) < 3:
        return False
    for v in vs:
        if bin(g.adj[v] & mask).count("1") != 2:
            return False
    comp = 1 << vs[0]
    frontier = comp
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v] & mask
        nxt &= ~comp
        comp |= nxt
        frontier = nxt
    return comp == mask


def wheel_size(g: Graph) -> Optional[int]:
    """n if G is the wheel W_n, else None."""
    if g.n < 4 or g.m != 2 * (g.n - 1):
        return None
    full = (1 << g.n) - 1
    for h in range(g.n):
        if g.adj[h] == full & ~(1 << h) and _is_cycle(g, full & ~(1 << h)):
            return g.n - 1
    return None


def biwheel_params(g: Graph) -> Optional[Tuple[int, bool]]:
    """(n, axle) if G is B_n or B_n^+ for some n >= 3."""
    if g.n < 5:
        return None
    full = (1 << g.n) - 1
    degs = g.degrees()
    cands = [v for v in range(g.n) if degs[v] >= g.n - 2]
    for h1, h2 in combinations(cands, 2):
        rest = full & ~(1 << h1) & ~(1 << h2)
        if g.adj[h1] & rest != rest or g.adj[h2] & rest != rest:
            continue
        if _is_cycle(g, rest):
            return g.n - 2, bool(g.adj[h1] >> h2 & 1)
    return None


def is_squared_cycle(g: Graph) -> bool:
    """Hamiltonian-cycle search v_1..v_n with all distance-2 chords present."""
    n = g.n
    if n < 5 or g.m != 2 * n or not g.is_regular(4):
        return False
    adj = g.adj
    seq = [0]
    used = 1

    def extend() -> bool:
        nonlocal used
        if len(seq) == n:
            a, b = seq[-2], seq[-1]
            return bool(adj[b] >> seq[0] & 1 and adj[b] >> seq[1] & 1 and adj[a] >> seq[0] & 1)
        cand = adj[seq[-1]] & ~used
        if len(seq) >= 2:
            cand &= adj[seq[-2]]
        for v in bits(cand):
            seq.append(v)
            used |= 1 << v
            if extend():
                return True
            used &= ~(1 << v)
            seq.pop()
        return False

    return extend()


def ladder_params(g: Graph) -> List[Tuple[int, bool]]:
    """All (n, twisted) with G equal to A_n / A_n' up to relabelling."""
    if g.n < 6 or g.n % 2 or not g.is_regular(3):
        return []
    n = g.n // 2
    adj = g.adj
    found = set()
    for x1, y1 in g.edges():
        for a, b in ((x1, y1), (y1, x1)):
            for x2 in bits(adj[a] & ~(1 << b)):
                for y2 in bits(adj[b] & ~(1 << a) & adj[x2]):
                    if y2 == x2:
                        continue
                    xs, ys = [a, x2], [b, y2]
                    used = (1 << a) | (1 << b) | (1 << x2) | (1 << y2)
                    ok = True
                    while len(xs) < n:
                        nx_ = adj[xs[-1]] & ~(1 << ys[-1]) & ~(1 << xs[-2])
                        ny_ = adj[ys[-1]] & ~(1 << xs[-1]) & ~(1 << ys[-2])
                        if bin(nx_).count("1") != 1 or bin(ny_).count("1") != 1:
                            ok = False
                            break
                        u, w = bits(nx_)[0], bits(ny_)[0]
                        if used >> u & 1 or used >> w & 1 or u == w or not adj[u] >> w & 1:
                            ok = False
                            break
                        xs.append(u)
                        ys.append(w)
                        used |= (1 << u) | (1 << w)
                    if not ok:
                        continue
                    if adj[xs[0]] >> xs[-1] & 1 and adj[ys[0]] >> ys[-1] & 1:
                        found.add((n, False))
                    if adj[xs[0]] >> ys[-1] & 1 and adj[ys[0]] >> xs[-1] & 1:
                        found.add((n, True))
    return sorted(found)


def root_of_line_graph(g: Graph) -> Optional[Graph]:
    """A cubic graph Q with L(Q) isomorphic to G, if one exists.

    Searches for a partition of E(G) into triangles with every vertex in
    exactly two of them (a Krausz cover by triangles). The root has one
    vertex per triangle and one edge per vertex of G.
    """
    if g.n < 6 or g.n % 3 or not g.is_regular(4):
        return None
    adj = g.adj
    edges = g.edges()
    covered = set()
    chosen: List[Tuple[int, int, int]] = []

    def solve() -> bool:
        e = next((e for e in edges if e not in covered), None)
        if e is None:
            return True
        u, v = e
        for z in bits(adj[u] & adj[v]):
            e1 = (min(u, z), max(u, z))
            e2 = (min(v, z), max(v, z))
            if e1 in covered or e2 in covered:
                continue
            covered.update((e, e1, e2))
            chosen.append(tuple(sorted((u, v, z))))
            if solve():
                return True
            chosen.pop()
            covered.difference_update((e, e1, e2))
        return False

    if not solve():
        return None
    tris = sorted(chosen)
    where: List[List[int]] = [[] for _ in range(g.n)]
    for i, t in enumerate(tris):
        for v in t:
            where[v].append(i)
    if any(len(w) != 2 for w in where):
        return None
    return make_graph(len(tris), [tuple(w) for w in where])


@lru_cache(maxsize=None)
def _sporadic_forms() -> Tuple[Tuple[str, FamilyId], ...]:
    return (
        (canonical_form(pyramid()), Pyramid),
        (canonical_form(kite()), Kite),
        (canonical_form(complete_graph(6)), K6Id),
        (canonical_form(k6_minus()), K6MinusId),
        (canonical_form(k33_plus()), K33PlusId),
    )


def sporadic(g: Graph) -> Optional[FamilyId]:
    if g.n not in (6, 7):
        return None
    form = canonical_form(g)
    for f, fid in _sporadic_forms():
        if f == form:
            return fid
    return None


def in_line_family(g: Graph) -> bool:
    """Membership in the line graphs of internally 4-connected cubic graphs."""
    q = root_of_line_graph(g)
    return q is not None and is_internally_4c_cubic(q)


def recognize(g: Graph) -> FrozenSet[FamilyId]:
    out = set()
    w = wheel_size(g)
    if w is not None:
        out.add(Wheel(w))
    if is_squared_cycle(g):
        out.add(SquaredCycle(g.n))
    b = biwheel_params(g)
    if b is not None:
        out.add(Biwheel(*b))
    if in_line_family(g):
        out.add(LineOfCubic)
    for n, tw in ladder_params(g):
        out.add(LadderA(n, tw))
    s = sporadic(g)
    if s is not None:
        out.add(s)
    if g.n <= 6 and is_k_connected(g, 3):
        out.add(Small3Connected)
    return frozenset(out)


def format_families(fids) -> str:
    return " ".join(str(f) for f in sorted(fids, key=FamilyId.sort_key))


# -- class predicates used by the chain theorems ----------------------------

def is_wheel(g: Graph) -> bool:
    return wheel_size(g) is not None


def in_C(g: Graph) -> bool:
    return is_squared_cycle(g)


def in_B(g: Graph, min_n: int = 4) -> bool:
    b = biwheel_params(g)
    return b is not None and b[0] >= min_n


def in_A(g: Graph, min_n: int = 4) -> bool:
    return any(n >= min_n for n, _ in ladder_params(g))


def in_G6(g: Graph) -> bool:
    return g.n <= 6 and is_k_connected(g, 3)
