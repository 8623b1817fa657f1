"""Cubic graphs and minimum vertex cover solvers.

Vertices are 0-based in memory; graph files use 1-based labels in a
DIMACS-like format (``p <n> <m>`` header, then one ``e <u> <v>`` line
per edge).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotACover, NotCubic, NotSimple


@dataclass(frozen=True)
class CubicGraph:
    n: int
    edges: tuple  # tuple of (u, v) with u < v

    def neighbors(self, v: int) -> list:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)

    def incident_edges(self, v: int) -> list:
        return [e for e in self.edges if v in e]

    @property
    def m(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class VertexCover:
    vertices: frozenset

    def __len__(self) -> int:
        return len(self.vertices)


def validate_cubic(n: int, edges: Iterable[Sequence[int]]) -> CubicGraph:
    """Build a CubicGraph, rejecting loops, multi-edges and non-3-regular input."""
    norm = []
    seen = set()
    degree = [0] * n
    for e in edges:
        u, v = e
        if u == v:
            raise NotSimple(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise NotCubic(f"edge ({u},{v}) references a vertex outside 0..{n - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise NotSimple(f"duplicate edge {key}")
        seen.add(key)
        norm.append(key)
        degree[u] += 1
        degree[v] += 1
    for v, d in enumerate(degree):
        if d != 3:
            raise NotCubic(f"vertex {v} has degree {d}, expected 3")
    return CubicGraph(n=n, edges=tuple(sorted(norm)))


def is_cover(g: CubicGraph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    return all(u in vs or v in vs for u, v in g.edges)


def check_cover(g: CubicGraph, vertices: Iterable[int]) -> VertexCover:
    vs = frozenset(vertices)
    for u, v in g.edges:
        if u not in vs and v not in vs:
            raise NotACover(f"edge ({u},{v}) is uncovered")
    return VertexCover(vs)


def _matching_lower_bound(edges: list) -> int:
    # Greedy maximal matching: its size lower-bounds any vertex cover.
    used = set()
    size = 0
    for u, v in edges:
        if u not in used and v not in used:
            used.add(u)
            used.add(v)
            size += 1
    return size


def exact_vertex_cover(g: CubicGraph) -> VertexCover:
    """Minimum vertex cover by branch and bound.

    Branches on an endpoint of the uncovered edge whose endpoints have
    the highest residual degree; prunes with a maximal-matching lower
    bound.  Intended for n up to roughly 30.
    """
    best = list(range(g.n))  # trivial cover

    def residual_degree(v: int, edges: list) -> int:
        return sum(1 for e in edges if v in e)

    def branch(edges: list, chosen: list) -> None:
        nonlocal best
        if not edges:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + _matching_lower_bound(edges) >= len(best):
            return
        # Pick the edge maximizing the larger endpoint degree.
        pick = max(
            edges,
            key=lambda e: max(residual_degree(e[0], edges), residual_degree(e[1], edges)),
        )
        u, v = pick
        if residual_degree(v, edges) > residual_degree(u, edges):
            u, v = v, u
        for w in (u, v):
            rest = [e for e in edges if w not in e]
            chosen.append(w)
            branch(rest, chosen)
            chosen.pop()

    branch(list(g.edges), [])
    return VertexCover(frozenset(best))


def greedy_vertex_cover(g: CubicGraph) -> VertexCover:
    """Maximal-matching 2-approximation: take both endpoints of each matched edge."""
    used = set()
    for u, v in g.edges:
        if u not in used and v not in used:
            used.add(u)
            used.add(v)
    return check_cover(g, used)


# Built-in desk-scale instances with independently known cover numbers.

def k4() -> CubicGraph:
    return validate_cubic(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def k33() -> CubicGraph:
    return validate_cubic(6, [(a, b) for a in (0, 1, 2) for b in (3, 4, 5)])


def petersen() -> CubicGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return validate_cubic(10, outer + inner + spokes)


def q3() -> CubicGraph:
    # Vertices are 3-bit strings; edges join strings at Hamming distance 1.
    edges = []
    for v in range(8):
        for b in range(3):
            w = v ^ (1 << b)
            if v < w:
                edges.append((v, w))
    return validate_cubic(8, edges)


BUILTIN_GRAPHS = {"k4": k4, "k33": k33, "petersen": petersen, "q3": q3}


def builtin(name: str) -> CubicGraph:
    try:
        return BUILTIN_GRAPHS[name]()
    except KeyError:
        raise KeyError(
            f"unknown builtin {name!r}; choose from {sorted(BUILTIN_GRAPHS)}"
        ) from None


def write_graph(g: CubicGraph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> CubicGraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            n = int(parts[1])
        elif parts[0] == "e":
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        else:
            raise ValueError(f"line {lineno}: unrecognized directive {parts[0]!r}")
    if n is None:
        raise ValueError("missing 'p <n> <m>' header")
    return validate_cubic(n, edges)
