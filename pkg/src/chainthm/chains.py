"""Chain construction and independent replay for the four chain theorems.

A theorem binds a connectivity class, the families excluded from its
hypothesis, the per-step exclusions, its target graphs and the allowed
step kinds. ``find_chain`` is greedy: every eligible non-target graph is
guaranteed a step landing on an eligible graph or a target, so the first
candidate in a fixed order is always safe to take.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, List, Optional, Tuple, Union

from . import families as fam
from . import graph6
from .canon import canonical_form
from .connectivity import is_k_connected, is_quasi_4_connected, is_weakly_4_connected
from .graph import Graph, GraphError, contract, delete_edge, subgraph_embedding, triangles_containing
from .operations import (
    O1Witness,
    O2Witness,
    O3Witness,
    WitnessError,
    apply_O1,
    apply_O2,
    apply_O3,
    find_O1_sites,
    find_O2_sites,
    find_O3_sites,
)
from .planarity import is_planar


class ChainError(Exception):
    pass


class IneligibleInput(ChainError):
    """The input is outside the theorem's class or in an excluded family."""


class TheoremViolation(ChainError):
    """An eligible non-target graph admits no step: a bug or a counterexample."""

    def __init__(self, graph: Graph, theorem: "TheoremId"):
        self.graph = graph
        self.theorem = theorem
        super().__init__(f"no {theorem.value} step from {graph6.encode(graph)}")


class SpanningTargetMissing(ChainError):
    def __init__(self, graph: Graph):
        self.graph = graph
        super().__init__(f"no spanning pyramid or kite in {graph6.encode(graph)}")


class TheoremId(enum.Enum):
    TuttePlus = "tutte+"
    FourConn = "4c"
    Weak4 = "w4c"
    Quasi4 = "q4c"

    @classmethod
    def parse(cls, text: str) -> "TheoremId":
        for t in cls:
            if t.value == text or t.name.lower() == text.lower():
                return t
        raise ValueError(f"unknown theorem {text!r}; expected one of tutte+, 4c, w4c, q4c")


# -- theorem data -----------------------------------------------------------

def in_class(g: Graph, t: TheoremId) -> bool:
    if t is TheoremId.TuttePlus:
        return is_k_connected(g, 3)
    if t is TheoremId.FourConn:
        return is_k_connected(g, 4)
    if t is TheoremId.Weak4:
        return is_weakly_4_connected(g)
    return is_quasi_4_connected(g)


@lru_cache(maxsize=None)
def target_graphs(t: TheoremId) -> Tuple[Graph, ...]:
    if t is TheoremId.TuttePlus:
        return (fam.wheel(4),)
    if t is TheoremId.FourConn:
        return (fam.biwheel(4, True), fam.biwheel(5, False))
    if t is TheoremId.Weak4:
        return (fam.k33_plus(), fam.pyramid())
    return (fam.pyramid(), fam.kite())


@lru_cache(maxsize=None)
def _target_forms(t: TheoremId):
    # pyramid and kite share (n, m), so each key holds a set
    forms = {}
    for h in target_graphs(t):
        forms.setdefault((h.n, h.m), set()).add(canonical_form(h))
    return forms


def is_target(g: Graph, t: TheoremId) -> bool:
    forms = _target_forms(t).get((g.n, g.m))
    return forms is not None and canonical_form(g) in forms


def _small_weak_exclusion(g: Graph) -> bool:
    # {K4, W4, K6, K6^-}
    if g.n == 4 and g.m == 6:
        return True
    if g.n == 5 and fam.wheel_size(g) == 4:
        return True
    return g.n == 6 and g.m in (14, 15)


def theorem_excluded(g: Graph, t: TheoremId) -> bool:
    """Membership in the families the theorem's hypothesis excludes."""
    if t is TheoremId.TuttePlus:
        return fam.is_wheel(g)
    if t is TheoremId.FourConn:
        return fam.in_B(g) or fam.in_C(g) or fam.in_line_family(g)
    if t is TheoremId.Weak4:
        return _small_weak_exclusion(g) or fam.in_A(g, 3) or fam.in_B(g, 3)
    return fam.in_G6(g) or fam.in_A(g)


def step_excluded(g: Graph, t: TheoremId) -> bool:
    """Families a step may not land on (targets are carved out by callers)."""
    if t is TheoremId.Quasi4:
        # {W3, W4, W5, B3, B3+} and the ladders A
        w = fam.wheel_size(g)
        if w is not None and w <= 5:
            return True
        if g.n == 5 and fam.in_B(g, 3):
            return True
        return fam.in_A(g)
    return theorem_excluded(g, t)


def allowed_kinds(t: TheoremId) -> Tuple[str, ...]:
    return {
        TheoremId.TuttePlus: ("del", "con"),
        TheoremId.FourConn: ("del", "con", "o1"),
        TheoremId.Weak4: ("del", "con", "o2"),
        TheoremId.Quasi4: ("del", "con", "o3"),
    }[t]


def is_eligible(g: Graph, t: TheoremId) -> bool:
    return in_class(g, t) and not theorem_excluded(g, t)


# -- steps ------------------------------------------------------------------

Witness = Union[Tuple[int, int], O1Witness, O2Witness, O3Witness]


@dataclass(frozen=True)
class ChainStep:
    """One reduction; ``verts`` are in the predecessor's labelling."""

    kind: str
    verts: Tuple[int, ...]
    result: Graph

    def to_line(self) -> str:
        return f"{self.kind} {' '.join(map(str, self.verts))} -> {graph6.encode(self.result)}"


def apply_step(g: Graph, kind: str, verts: Tuple[int, ...]) -> Graph:
    """Replay one step; raises GraphError/WitnessError on an invalid step."""
    if kind == "del":
        return delete_edge(g, *verts)
    if kind == "con":
        u, v = verts
        if triangles_containing(g, u, v):
            raise WitnessError(f"contracted edge ({u}, {v}) lies in a triangle")
        return contract(g, u, v)
    if kind == "o1":
        return apply_O1(g, O1Witness(*verts))
    if kind == "o2":
        return apply_O2(g, O2Witness(*verts))
    if kind == "o3":
        return apply_O3(g, O3Witness(*verts))
    raise GraphError(f"unknown step kind {kind!r}")


def _raw_moves(g: Graph, t: TheoremId) -> Iterator[Tuple[str, Tuple[int, ...]]]:
    edges = g.edges()
    for e in edges:
        yield "del", e
    for u, v in edges:
        if not g.adj[u] & g.adj[v]:
            yield "con", (u, v)
    if t is TheoremId.FourConn:
        for w in find_O1_sites(g):
            yield "o1", w.vertices()
    elif t is TheoremId.Weak4:
        for w in find_O2_sites(g):
            yield "o2", w.vertices()
    elif t is TheoremId.Quasi4:
        for w in find_O3_sites(g):
            yield "o3", w.vertices()


def iter_step_candidates(g: Graph, t: TheoremId) -> Iterator[ChainStep]:
    """Valid steps from g in the order delete, contract, O_i; lazily."""
    g_nonplanar = t is TheoremId.FourConn and not is_planar(g)
    seen = set()
    for kind, verts in _raw_moves(g, t):
        h = apply_step(g, kind, verts)
        if h in seen:
            # two O1 orientations give the same graph; keep the first
            continue
        seen.add(h)
        if not in_class(h, t):
            continue
        if not is_target(h, t) and step_excluded(h, t):
            continue
        if g_nonplanar and is_planar(h):
            continue
        yield ChainStep(kind, tuple(verts), h)


def step_candidates(g: Graph, t: TheoremId) -> List[ChainStep]:
    if not in_class(g, t) or is_target(g, t):
        raise IneligibleInput("step candidates need a non-target graph of the theorem's class")
    return list(iter_step_candidates(g, t))


# -- chains -----------------------------------------------------------------

@dataclass
class Chain:
    theorem: TheoremId
    graphs: List[Graph]
    steps: List[ChainStep] = field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    @property
    def terminal(self) -> Graph:
        return self.graphs[-1]

    def to_text(self) -> str:
        lines = [f"theorem {self.theorem.value}", f"g0 {graph6.encode(self.graphs[0])}"]
        lines += [s.to_line() for s in self.steps]
        return "\n".join(lines) + "\n"


def seven_vertex_endgame(g: Graph) -> Chain:
    """Delete edges down to a spanning pyramid (planar g) or kite (nonplanar g)."""
    if g.n != 7:
        raise ValueError("endgame needs exactly seven vertices")
    target = fam.pyramid() if is_planar(g) else fam.kite()
    emb = subgraph_embedding(target, g)
    if emb is None:
        raise SpanningTargetMissing(g)
    keep = {(min(emb[u], emb[v]), max(emb[u], emb[v])) for u, v in target.edges()}
    chain = Chain(TheoremId.Quasi4, [g])
    cur = g
    for e in g.edges():
        if e not in keep:
            cur = delete_edge(cur, *e)
            chain.steps.append(ChainStep("del", e, cur))
            chain.graphs.append(cur)
    return chain


def find_chain(g: Graph, t: TheoremId, max_steps: Optional[int] = None) -> Chain:
    if not in_class(g, t):
        raise IneligibleInput(f"graph is not in the class of theorem {t.value}")
    if theorem_excluded(g, t):
        raise IneligibleInput(f"graph is in a family excluded by theorem {t.value}")
    chain = Chain(t, [g])
    cur = g
    limit = g.m if max_steps is None else max_steps
    while not is_target(cur, t):
        if t is TheoremId.Quasi4 and cur.n == 7:
            tail = seven_vertex_endgame(cur)
            chain.steps.extend(tail.steps)
            chain.graphs.extend(tail.graphs[1:])
            break
        step = next(iter_step_candidates(cur, t), None)
        if step is None or len(chain.steps) >= limit:
            raise TheoremViolation(cur, t)
        chain.steps.append(step)
        chain.graphs.append(step.result)
        cur = step.result
    return chain


@dataclass
class ChainReport:
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_chain(c: Chain) -> ChainReport:
    """Replay a chain from G_0 and list every violated condition."""
    t = c.theorem
    rep = ChainReport()
    bad = rep.violations.append
    if len(c.graphs) != len(c.steps) + 1:
        bad(f"chain has {len(c.graphs)} graphs for {len(c.steps)} steps")
        return rep
    for i, g in enumerate(c.graphs):
        if not in_class(g, t):
            bad(f"G{i} is not in the class of theorem {t.value}")
    g0 = c.graphs[0]
    if theorem_excluded(g0, t):
        bad("G0 lies in an excluded family")
    for i in range(1, len(c.graphs)):
        g = c.graphs[i]
        if not is_target(g, t) and step_excluded(g, t):
            bad(f"G{i} lies in a family excluded for intermediate graphs")
    cur = g0
    for i, s in enumerate(c.steps, 1):
        if s.kind not in allowed_kinds(t):
            bad(f"step {i}: kind {s.kind} not allowed for theorem {t.value}")
        try:
            h = apply_step(cur, s.kind, s.verts)
        except GraphError as exc:
            bad(f"step {i}: {exc}")
            h = None
        if h is not None and h != c.graphs[i]:
            bad(f"step {i}: replay does not reproduce G{i}")
        if s.result != c.graphs[i]:
            bad(f"step {i}: stored result differs from G{i}")
        prev, nxt = c.graphs[i - 1], c.graphs[i]
        drop = prev.m - nxt.m
        if s.kind in ("del", "con") and drop != 1:
            bad(f"step {i}: edge count drops by {drop}, expected 1")
        if s.kind in ("o1", "o2", "o3") and drop != 2:
            bad(f"step {i}: edge count drops by {drop}, expected 2")
        if t is TheoremId.FourConn and not is_planar(prev) and is_planar(nxt):
            bad(f"step {i}: nonplanar G{i - 1} reduced to planar G{i}")
        cur = c.graphs[i]
    if not is_target(c.terminal, t):
        bad("terminal graph is not a target")
    if t is TheoremId.FourConn and not is_planar(g0):
        if canonical_form(c.terminal) != canonical_form(fam.biwheel(4, True)):
            bad("nonplanar G0 must end at B4+")
    return rep


# -- text format ------------------------------------------------------------

def read_chain(text: str) -> Chain:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if len(lines) < 2:
        raise ChainError("chain file needs a theorem line and a g0 line")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "theorem":
        raise ChainError("line 1: expected 'theorem <id>'")
    try:
        t = TheoremId.parse(head[1])
    except ValueError as exc:
        raise ChainError(f"line 1: {exc}") from None
    g0 = lines[1].split()
    if len(g0) != 2 or g0[0] != "g0":
        raise ChainError("line 2: expected 'g0 <graph6>'")
    chain = Chain(t, [graph6.decode(g0[1])])
    arity = {"del": 2, "con": 2, "o1": 3, "o2": 7, "o3": 4}
    for k, line in enumerate(lines[2:], 3):
        parts = line.split()
        if len(parts) < 3 or parts[-2] != "->" or parts[0] not in arity:
            raise ChainError(f"line {k}: malformed step")
        kind = parts[0]
        verts = parts[1:-2]
        if len(verts) != arity[kind]:
            raise ChainError(f"line {k}: {kind} takes {arity[kind]} vertices")
        try:
            vs = tuple(int(v) for v in verts)
            res = graph6.decode(parts[-1])
        except (ValueError, GraphError) as exc:
            raise ChainError(f"line {k}: {exc}") from None
        chain.steps.append(ChainStep(kind, vs, res))
        chain.graphs.append(res)
    return chain
