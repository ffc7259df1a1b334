"""Exhaustive graph enumeration and the theorem/lemma verification harnesses.

Graphs are generated one vertex at a time: every graph on m vertices is
extended by a new vertex joined to every subset of the old ones, and
isomorphic copies are rejected through a canonical-form keyed set.
Min-degree pruning is sound because deleting a vertex lowers the
minimum degree by at most one.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from . import families as fam
from . import graph6
from .canon import canonical_form, canonical_graph
from .chains import (
    ChainError,
    TheoremId,
    find_chain,
    in_class,
    is_target,
    step_excluded,
    theorem_excluded,
    verify_chain,
)
from .connectivity import (
    find_paws,
    is_k_connected,
    is_quasi_4_connected,
    is_weakly_4_connected,
    triangles_at,
)
from .graph import Graph, add_edge, contract, delete_edge, make_graph, subgraph_embedding
from .operations import disjoint_splits, inverse_O1, inverse_O2, inverse_O3, split_vertex
from .planarity import is_planar

EXHAUSTIVE_BOUND = 9
WORKERS_ENV = "CHAINTHM_WORKERS"


class BoundExceeded(ValueError):
    pass


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


# -- enumeration ------------------------------------------------------------

@lru_cache(maxsize=None)
def _level(m: int, lower: int) -> Tuple[Graph, ...]:
    """Canonical representatives of all m-vertex graphs with min degree >= lower."""
    if m == 0:
        return (Graph(0, []),)
    parents = _level(m - 1, max(lower - 1, 0))
    seen: Dict[str, Graph] = {}
    for p in parents:
        low_verts = [v for v in range(p.n) if p.degree(v) < lower]
        others = [v for v in range(p.n) if p.degree(v) >= lower]
        # the new vertex must reach every vertex still below the bound
        need = 0
        for v in low_verts:
            need |= 1 << v
        for r in range(len(others) + 1):
            if len(low_verts) + r < lower:
                continue
            for extra in combinations(others, r):
                mask = need
                for v in extra:
                    mask |= 1 << v
                adj = list(p.adj) + [mask]
                for v in range(p.n):
                    if mask >> v & 1:
                        adj[v] |= 1 << p.n
                g = Graph._trusted(m, adj)
                key = canonical_form(g)
                if key not in seen:
                    seen[key] = canonical_graph(g)
    return tuple(seen[k] for k in sorted(seen))


def enumerate_graphs(n: int, filter: Optional[Callable[[Graph], bool]] = None, min_degree: int = 0) -> List[Graph]:
    """One canonically labelled representative per isomorphism class on n vertices.

    Output is sorted by canonical form. ``min_degree`` is pushed into the
    search; ``filter`` is applied to the final level only.
    """
    if n > EXHAUSTIVE_BOUND:
        raise BoundExceeded(f"n={n} exceeds the exhaustive bound {EXHAUSTIVE_BOUND}")
    if n < 0:
        raise ValueError("n must be non-negative")
    graphs = _level(n, max(min_degree, 0))
    if filter is None:
        return list(graphs)
    return [g for g in graphs if filter(g)]


def brute_force_classes(n: int) -> List[Graph]:
    """Isomorphism classes on n <= 6 vertices by orbit marking over labelled graphs.

    Independent of the canonical-form code: each class is represented by
    the smallest edge mask in its orbit under all vertex permutations.
    """
    if n > 6:
        raise BoundExceeded("brute-force class enumeration is limited to n <= 6")
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    perm_maps = []
    for perm in permutations(range(n)):
        perm_maps.append([index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs])
    seen = bytearray(1 << len(pairs))
    reps = []
    for mask in range(1 << len(pairs)):
        if seen[mask]:
            continue
        reps.append(mask)
        for pm in perm_maps:
            img = 0
            for i, j in enumerate(pm):
                if mask >> i & 1:
                    img |= 1 << j
            seen[img] = 1
    return [make_graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1]) for mask in reps]


# -- reports ----------------------------------------------------------------

@dataclass
class VerificationReport:
    id: str
    n_range: Tuple[int, int]
    counts: Dict[str, int] = field(default_factory=dict)
    violations: List[str] = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def bump(self, key: str, by: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + by

    def merge(self, other: "VerificationReport") -> None:
        for k, v in other.counts.items():
            self.bump(k, v)
        self.violations.extend(other.violations)

    def to_text(self, timing: bool = True) -> str:
        lines = [f"id {self.id}", f"n_min {self.n_range[0]}", f"n_max {self.n_range[1]}"]
        # class counts are computed here, not taken from any published table
        lines += [f"count.{k} {self.counts[k]}" for k in sorted(self.counts)]
        lines.append(f"violations {len(self.violations)}")
        lines += [f"violation {v}" for v in self.violations]
        if timing:
            lines.append(f"duration {self.duration:.2f}")
        lines.append(f"result {'pass' if self.passed else 'fail'}")
        return "\n".join(lines) + "\n"


# -- theorem verification ---------------------------------------------------

_THEOREM_MIN_DEGREE = {
    TheoremId.TuttePlus: 3,
    TheoremId.FourConn: 4,
    TheoremId.Weak4: 3,
    TheoremId.Quasi4: 3,
}


def _check_one(args) -> VerificationReport:
    t, g = args
    rep = VerificationReport(t.value, (g.n, g.n))
    if not in_class(g, t):
        return rep
    rep.bump("in_class")
    if theorem_excluded(g, t):
        rep.bump("excluded")
        return rep
    rep.bump("eligible")
    g6 = graph6.encode(g)
    try:
        chain = find_chain(g, t)
    except ChainError as exc:
        rep.violations.append(f"{g6} {type(exc).__name__}: {exc}")
        return rep
    problems = verify_chain(chain).violations
    rep.violations += [f"{g6} {p}" for p in problems]
    rep.bump("steps", len(chain))
    rep.bump(f"terminal.{canonical_form(chain.terminal)}")
    if t is TheoremId.FourConn and not is_planar(g):
        rep.bump("nonplanar_inputs")
    if t is TheoremId.Quasi4 and any(h.n == 7 for h in chain.graphs):
        rep.bump("endgame")
    return rep


def _run(jobs: List, fn, report: VerificationReport, workers: int) -> None:
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as ex:
            # map keeps input order, so the merge is deterministic
            parts = list(ex.map(fn, jobs, chunksize=max(1, len(jobs) // (8 * workers))))
    else:
        parts = [fn(j) for j in jobs]
    for p in parts:
        report.merge(p)


def verify_theorem(t: TheoremId, max_n: int, min_n: int = 1, workers: Optional[int] = None) -> VerificationReport:
    """Build and replay a chain for every eligible graph with min_n <= |G| <= max_n."""
    if max_n > EXHAUSTIVE_BOUND:
        raise BoundExceeded(f"max_n={max_n} exceeds the exhaustive bound {EXHAUSTIVE_BOUND}")
    start = time.perf_counter()
    rep = VerificationReport(t.value, (min_n, max_n))
    workers = worker_count() if workers is None else workers
    for n in range(min_n, max_n + 1):
        graphs = enumerate_graphs(n, min_degree=_THEOREM_MIN_DEGREE[t])
        rep.bump(f"graphs.n{n}", len(graphs))
        _run([(t, g) for g in graphs], _check_one, rep, workers)
    rep.duration = time.perf_counter() - start
    return rep


# -- lemma verification -----------------------------------------------------

LEMMA_IDS = (
    "split",
    "degree",
    "side",
    "pyramid-unique",
    "seven-vertex",
    "w4c-iff-edgebound",
    "q4c-iff-vertexbound",
    "w4c-implies-q4c",
    "cubic-triangle-characterization",
)


def _lemma_split(rep, n):
    # min(d(x), d(y)) >= k and si(G/xy) k-connected imply G k-connected
    for g in enumerate_graphs(n):
        for k in (3, 4):
            if g.n <= k:
                continue
            conn = None
            for x, y in g.edges():
                if min(g.degree(x), g.degree(y)) < k:
                    continue
                if not is_k_connected(contract(g, x, y), k):
                    continue
                rep.bump(f"instances.k{k}")
                if conn is None:
                    conn = is_k_connected(g, k)
                if not conn:
                    rep.violations.append(f"{graph6.encode(g)} k={k} edge {x} {y}")


def _lemma_degree(rep, n):
    # triangle xyz, si(G/xy) k-connected, G\xz not: d(x) = k and d(z) > k
    for k in (3, 4):
        for g in enumerate_graphs(n, min_degree=k):
            if not is_k_connected(g, k):
                continue
            for x, y in g.edges():
                for a, b in ((x, y), (y, x)):
                    common = g.adj[a] & g.adj[b]
                    if not common:
                        continue
                    if not is_k_connected(contract(g, a, b), k):
                        continue
                    for z in range(g.n):
                        if not common >> z & 1:
                            continue
                        if is_k_connected(delete_edge(g, a, z), k):
                            continue
                        rep.bump(f"instances.k{k}")
                        if not (g.degree(a) == k and g.degree(z) > k):
                            rep.violations.append(f"{graph6.encode(g)} k={k} x={a} y={b} z={z}")


def _lemma_side(rep, n):
    # N(x) \ N(y) = {y, z} with G, si(G/xy) k-connected: si(G/xz) k-connected
    for k in (3, 4):
        for g in enumerate_graphs(n, min_degree=k):
            if not is_k_connected(g, k):
                continue
            for x in range(g.n):
                for y in g.neighbors(x):
                    rest = g.adj[x] & ~g.adj[y]
                    if bin(rest).count("1") != 2 or not rest >> y & 1:
                        continue
                    z = (rest & ~(1 << y)).bit_length() - 1
                    if not is_k_connected(contract(g, x, y), k):
                        continue
                    rep.bump(f"instances.k{k}")
                    if not is_k_connected(contract(g, x, z), k):
                        rep.violations.append(f"{graph6.encode(g)} k={k} x={x} y={y} z={z}")


def has_paw_partition(g: Graph) -> bool:
    """Whether E(G) splits into three edge-disjoint paws."""
    if g.m != 12:
        return False
    paws = [p.edges() for p in find_paws(g)]
    full = frozenset(g.edges())
    for a, b, c in combinations(paws, 3):
        if len(a | b | c) == 12 and a | b | c == full:
            return True
    return False


def _lemma_pyramid(rep, n):
    if n != 7:
        return
    found = [g for g in enumerate_graphs(7, min_degree=3) if is_weakly_4_connected(g) and has_paw_partition(g)]
    rep.bump("classes", len(found))
    target = canonical_form(fam.pyramid())
    if len(found) != 1 or canonical_form(found[0]) != target:
        rep.violations.append("classes " + " ".join(canonical_form(g) for g in found))


def _lemma_seven(rep, n):
    if n != 7:
        return
    pyr, kite = fam.pyramid(), fam.kite()
    for g in enumerate_graphs(7, min_degree=3):
        if not is_quasi_4_connected(g):
            continue
        planar = is_planar(g)
        rep.bump("planar" if planar else "nonplanar")
        if subgraph_embedding(pyr if planar else kite, g) is None:
            rep.violations.append(f"{graph6.encode(g)} planar={planar}")


def _lemma_w4c_edges(rep, n):
    for g in enumerate_graphs(n, min_degree=3):
        if g.m > 9 or not is_k_connected(g, 3):
            continue
        rep.bump("instances")
        if not is_weakly_4_connected(g):
            rep.violations.append(graph6.encode(g))


def _lemma_q4c_vertices(rep, n):
    if n > 6:
        return
    for g in enumerate_graphs(n, min_degree=3):
        if not is_k_connected(g, 3):
            continue
        rep.bump("instances")
        if not is_quasi_4_connected(g):
            rep.violations.append(graph6.encode(g))


def _lemma_w_implies_q(rep, n):
    for g in enumerate_graphs(n, min_degree=3):
        if is_weakly_4_connected(g):
            rep.bump("instances")
            if not is_quasi_4_connected(g):
                rep.violations.append(graph6.encode(g))


def cubic_vertices_in_one_triangle(g: Graph) -> bool:
    return all(triangles_at(g, v) <= 1 for v in range(g.n) if g.degree(v) == 3)


def _lemma_cubic_triangle(rep, n):
    for g in enumerate_graphs(n, min_degree=3):
        if g.m < 10 or not is_quasi_4_connected(g):
            continue
        rep.bump("instances")
        if is_weakly_4_connected(g) != cubic_vertices_in_one_triangle(g):
            rep.violations.append(graph6.encode(g))


_LEMMAS = {
    "split": _lemma_split,
    "degree": _lemma_degree,
    "side": _lemma_side,
    "pyramid-unique": _lemma_pyramid,
    "seven-vertex": _lemma_seven,
    "w4c-iff-edgebound": _lemma_w4c_edges,
    "q4c-iff-vertexbound": _lemma_q4c_vertices,
    "w4c-implies-q4c": _lemma_w_implies_q,
    "cubic-triangle-characterization": _lemma_cubic_triangle,
}


def verify_lemma(lemma_id: str, max_n: int, min_n: int = 1) -> VerificationReport:
    if lemma_id not in _LEMMAS:
        raise ValueError(f"unknown lemma id {lemma_id!r}; expected one of {', '.join(LEMMA_IDS)}")
    if max_n > EXHAUSTIVE_BOUND:
        raise BoundExceeded(f"max_n={max_n} exceeds the exhaustive bound {EXHAUSTIVE_BOUND}")
    start = time.perf_counter()
    rep = VerificationReport(lemma_id, (min_n, max_n))
    for n in range(min_n, max_n + 1):
        _LEMMAS[lemma_id](rep, n)
    rep.duration = time.perf_counter() - start
    return rep


# -- generation from the targets --------------------------------------------

MODES = ("class-checked", "degree-only")


def _expansions(h: Graph, t: TheoremId, max_n: int, min_part: int) -> Iterable[Tuple[Graph, Graph]]:
    """(G, H) pairs with H obtained from G by one allowed reduction."""
    for u, v in h.non_edges():
        yield add_edge(h, u, v), h
    if h.n >= max_n:
        return
    for v in range(h.n):
        for a, b in disjoint_splits(h, v, min_part):
            if a > b:
                continue  # the mirrored split gives an isomorphic graph
            yield split_vertex(h, v, a, b), h
    inverse = {TheoremId.FourConn: inverse_O1, TheoremId.Weak4: inverse_O2, TheoremId.Quasi4: inverse_O3}.get(t)
    if inverse is not None:
        for g, _ in inverse(h):
            yield g, h


def generate_from_base(t: TheoremId, max_n: int, mode: str = "class-checked") -> List[Graph]:
    """Close the target set under inverse steps; canonical graphs sorted by form."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "degree-only" and t is not TheoremId.FourConn:
        raise ValueError("degree-only mode is defined for the 4-connected theorem only")
    if max_n > EXHAUSTIVE_BOUND:
        raise BoundExceeded(f"max_n={max_n} exceeds the exhaustive bound {EXHAUSTIVE_BOUND}")
    min_part = 3 if t is TheoremId.FourConn else 2
    found: Dict[str, Graph] = {}
    frontier = []
    for g in target_graphs_within(t, max_n):
        key = canonical_form(g)
        found[key] = canonical_graph(g)
        frontier.append(found[key])
    rejected = set()
    planar_cache: Dict[Graph, bool] = {}

    def planar(x):
        if x not in planar_cache:
            planar_cache[x] = is_planar(x)
        return planar_cache[x]

    while frontier:
        nxt = []
        for h in frontier:
            for g, pred in _expansions(h, t, max_n, min_part):
                key = canonical_form(g)
                if key in found:
                    continue
                if mode == "degree-only":
                    if g.min_degree() < 4:
                        continue
                else:
                    if key in rejected:
                        continue
                    if not in_class(g, t) or (not is_target(g, t) and step_excluded(g, t)):
                        rejected.add(key)
                        continue
                    if t is TheoremId.FourConn and not planar(g) and planar(pred):
                        # this route is not a valid step, another may be
                        continue
                found[key] = canonical_graph(g)
                nxt.append(found[key])
        frontier = nxt
    out = [found[k] for k in sorted(found)]
    if mode == "degree-only":
        out = [g for g in out if is_target(g, t) or (in_class(g, t) and not theorem_excluded(g, t))]
    return out


def target_graphs_within(t: TheoremId, max_n: int) -> List[Graph]:
    from .chains import target_graphs

    return [g for g in target_graphs(t) if g.n <= max_n]


def class_by_enumeration(t: TheoremId, max_n: int) -> List[Graph]:
    """Eligible graphs plus targets up to max_n, by exhaustive enumeration."""
    out = []
    for n in range(1, max_n + 1):
        for g in enumerate_graphs(n, min_degree=_THEOREM_MIN_DEGREE[t]):
            if is_target(g, t) or (in_class(g, t) and not theorem_excluded(g, t)):
                out.append(g)
    return sorted(out, key=canonical_form)


def write_catalog(path, graphs: Iterable[Graph]) -> None:
    lines = sorted(canonical_form(g) for g in graphs)
    with open(path, "w") as fh:
        fh.writelines(s + "\n" for s in lines)
