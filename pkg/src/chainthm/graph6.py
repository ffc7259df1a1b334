"""graph6 encoding and decoding (McKay's format), one graph per line."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, List, Tuple, Union

from .graph import Graph, GraphError, MAX_VERTICES


class Graph6Error(GraphError):
    pass


def _encode_n(n: int) -> List[int]:
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    raise Graph6Error(f"graph6 cannot encode {n} vertices")


def encode(g: Graph) -> str:
    """graph6 string of ``g`` (no header, no newline)."""
    out = _encode_n(g.n)
    group = 0
    filled = 0
    for v in range(1, g.n):
        row = g.adj[v]
        for u in range(v):
            group = group << 1 | (row >> u & 1)
            filled += 1
            if filled == 6:
                out.append(group + 63)
                group = 0
                filled = 0
    if filled:
        out.append((group << (6 - filled)) + 63)
    return bytes(out).decode("ascii")


def decode(s: str) -> Graph:
    """Parse one graph6 string; an optional ``>>graph6<<`` header is accepted."""
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii", errors="replace")
    if not data:
        raise Graph6Error("empty graph6 string")
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside the graph6 range 63..126")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("graph6 with more than 258047 vertices is not supported")
        if len(data) < 4:
            raise Graph6Error("truncated graph6 size field")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"{n} vertices exceeds the bound {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, found {len(body)}")
    adj = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    if need and nbits % 6:
        pad = (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("nonzero padding bits")
    return Graph._trusted(n, adj)


def read_lines(lines: Iterable[str]) -> List[Tuple[int, Graph]]:
    """Decode graph6 lines, skipping blanks and ``#`` comments.

    Returns (line number, graph) pairs; decoding errors name the line.
    """
    out = []
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            out.append((lineno, decode(text)))
        except GraphError as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None
    return out


def read_file(path: Union[str, Path]) -> List[Tuple[int, Graph]]:
    with open(path, encoding="ascii", errors="replace") as fh:
        return read_lines(fh)


def write_file(path: Union[str, Path], graphs: Iterable[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(encode(g) + "\n")
