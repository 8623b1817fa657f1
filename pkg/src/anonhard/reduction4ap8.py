"""Width-8, k=4 instance built from a cubic graph.

Each source vertex v gets 5 vertex rows over its private alphabet, each
source edge one edge row, and the instance ends with 4 free rows whose
symbols match nothing else.  The 8 columns form 4 two-column blocks;
adjacent vertices get different blocks, so an edge row can agree with
both endpoint alphabets at once.

Canonical solutions color each vertex red (one cluster of all 5 vertex
rows, cost 15) or black (a 4-row cluster plus a cluster of the fifth
row with the vertex's 3 edge rows, cost 12 + 24), with every remaining
row in a single filler cluster costing 8 per member.  Red vertices form
a cover; a size-p cover gives cost 12(n-p) + 15p + 8m + 32.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Dict, List, Optional, Sequence, Set, Tuple

from .core import (
    Instance,
    check_partition,
    cluster_cost,
    edge_sym,
    free_sym,
    is_feasible,
    suppressed_columns,
    vertex_row_sym,
    vertex_sym,
)
from .errors import (
    EdgeRowConflict,
    Infeasible,
    MissingProvenance,
    NotACover,
    NotCanonical,
)
from .graphs import CubicGraph, VertexCover, check_cover

WIDTH = 8


@dataclass(frozen=True)
class VertexRowProv:
    v: int
    h: int  # 1..5


@dataclass(frozen=True)
class EdgeRowProv:
    u: int  # u < v
    v: int


@dataclass(frozen=True)
class FreeRowProv:
    i: int  # 1..4


def block_columns(b: int) -> Tuple[int, int]:
    """0-based columns of 1-based block b."""
    return (2 * (b - 1), 2 * (b - 1) + 1)


def assign_blocks(g: CubicGraph) -> Dict[int, int]:
    """Proper 4-coloring by greedy ascending order; degree 3 always leaves a free color."""
    blocks: Dict[int, int] = {}
    for v in range(g.n):
        taken = {blocks[w] for w in g.neighbors(v) if w in blocks}
        blocks[v] = next(b for b in (1, 2, 3, 4) if b not in taken)
    return blocks


def build_4ap8_instance(g: CubicGraph) -> Instance:
    """5n + m + 4 rows of width 8, k = 4, with full provenance."""
    blocks = assign_blocks(g)
    rows: List[tuple] = []
    prov: List[object] = []
    for v in range(g.n):
        bcols = set(block_columns(blocks[v]))
        for h in (1, 2, 3, 4, 5):
            row = tuple(
                vertex_sym(v) if (col % 2 == 0 or col in bcols) else vertex_row_sym(v, h)
                for col in range(WIDTH)
            )
            rows.append(row)
            prov.append(VertexRowProv(v, h))
    for u, v in g.edges:
        ucols = set(block_columns(blocks[u]))
        vcols = set(block_columns(blocks[v]))
        row = tuple(
            vertex_sym(u) if col in ucols else vertex_sym(v) if col in vcols else edge_sym(u, v)
            for col in range(WIDTH)
        )
        rows.append(row)
        prov.append(EdgeRowProv(u, v))
    for i in (1, 2, 3, 4):
        rows.append((free_sym(i),) * WIDTH)
        prov.append(FreeRowProv(i))
    return Instance(
        rows=tuple(rows),
        k=4,
        provenance=tuple(prov),
        params={"reduction": "4ap8", "n": g.n, "m": g.m, "edges": g.edges, "blocks": blocks},
    )


class RowIndex:
    """Row-index lookup tables derived from provenance."""

    def __init__(self, inst: Instance):
        if inst.provenance is None:
            raise MissingProvenance("instance has no provenance")
        self.vertex_rows: Dict[int, List[int]] = {}
        self.edge_rows: Dict[Tuple[int, int], int] = {}
        self.free_rows: List[int] = []
        for idx, p in enumerate(inst.provenance):
            if isinstance(p, VertexRowProv):
                self.vertex_rows.setdefault(p.v, []).append(idx)
            elif isinstance(p, EdgeRowProv):
                self.edge_rows[(p.u, p.v)] = idx
            elif isinstance(p, FreeRowProv):
                self.free_rows.append(idx)
            else:
                raise MissingProvenance(f"row {idx} has unexpected provenance {p!r}")

    def incident_edge_rows(self, v: int) -> List[int]:
        return [i for (a, b), i in sorted(self.edge_rows.items()) if v in (a, b)]


def build_red(inst: Instance, v: int, index: Optional[RowIndex] = None) -> List[tuple]:
    """One cluster of all 5 vertex rows; cost 15."""
    ri = index or RowIndex(inst)
    return [tuple(sorted(ri.vertex_rows[v]))]


def build_black(
    inst: Instance,
    v: int,
    index: Optional[RowIndex] = None,
    taken: Optional[Set[int]] = None,
) -> List[tuple]:
    """Two clusters: 4 vertex rows (cost 12) and the fifth row with the
    vertex's 3 edge rows (cost 24).  ``taken`` lists row indices already
    consumed elsewhere; a consumed edge row is a conflict."""
    ri = index or RowIndex(inst)
    vrows = sorted(ri.vertex_rows[v])
    erows = ri.incident_edge_rows(v)
    if taken:
        clash = [i for i in erows if i in taken]
        if clash:
            raise EdgeRowConflict(
                f"edge rows {clash} of vertex {v} are already consumed"
            )
    return [tuple(vrows[1:]), tuple(sorted([vrows[0]] + erows))]


def vc_to_solution_4ap8(inst: Instance, cover: VertexCover) -> List[tuple]:
    """Canonical clustering of cost 12(n-p) + 15p + 8m + 32 for a size-p cover."""
    ri = RowIndex(inst)
    n = inst.params["n"]
    for u, v in inst.params["edges"]:
        if u not in cover.vertices and v not in cover.vertices:
            raise NotACover(f"edge ({u},{v}) is uncovered")
    clusters: List[tuple] = []
    taken: Set[int] = set()
    for v in range(n):
        if v in cover.vertices:
            clusters += build_red(inst, v, index=ri)
        else:
            black = build_black(inst, v, index=ri, taken=taken)
            taken.update(black[1])
            clusters += black
    filler = list(ri.free_rows)
    for e, idx in sorted(ri.edge_rows.items()):
        if idx not in taken:
            filler.append(idx)
    clusters.append(tuple(sorted(filler)))
    return clusters


def canonical_cost_formula(n: int, m: int, p: int) -> int:
    return 12 * (n - p) + 15 * p + 8 * m + 32


@dataclass
class Canonical4:
    color: Dict[int, str]  # v -> "red" | "black"
    filler: tuple


def parse_canonical_4ap8(inst: Instance, clusters: Sequence[Collection[int]]) -> Canonical4:
    """Recognize a canonical clustering or raise NotCanonical naming the cluster."""
    if inst.provenance is None:
        raise MissingProvenance("instance has no provenance")
    check_partition(inst, clusters)
    prov = inst.provenance
    n = inst.params["n"]

    filler = None
    red: Set[int] = set()
    black_a: Set[int] = set()
    black_b: Set[int] = set()
    for ci, c in enumerate(clusters):
        members = sorted(c)
        ps = [prov[i] for i in members]
        if any(isinstance(p, FreeRowProv) for p in ps):
            if filler is not None:
                raise NotCanonical(f"cluster {ci}: second cluster with free rows")
            if sum(isinstance(p, FreeRowProv) for p in ps) != 4 or not all(
                isinstance(p, (FreeRowProv, EdgeRowProv)) for p in ps
            ):
                raise NotCanonical(f"cluster {ci} is not a valid filler cluster")
            filler = tuple(members)
            continue
        if all(isinstance(p, VertexRowProv) for p in ps) and len({p.v for p in ps}) == 1:
            v = ps[0].v
            if len(ps) == 5:
                red.add(v)
                continue
            if len(ps) == 4:
                if v in black_a:
                    raise NotCanonical(f"cluster {ci}: duplicate 4-row cluster for {v}")
                black_a.add(v)
                continue
            raise NotCanonical(f"cluster {ci}: {len(ps)} vertex rows of one vertex")
        vps = [p for p in ps if isinstance(p, VertexRowProv)]
        eps = [p for p in ps if isinstance(p, EdgeRowProv)]
        if len(vps) == 1 and len(eps) == 3 and len(ps) == 4:
            v = vps[0].v
            if all(v in (p.u, p.v) for p in eps):
                if v in black_b:
                    raise NotCanonical(f"cluster {ci}: duplicate edge cluster for {v}")
                black_b.add(v)
                continue
        raise NotCanonical(f"cluster {ci} matches no canonical shape")

    if filler is None:
        raise NotCanonical("no filler cluster")
    color: Dict[int, str] = {}
    for v in range(n):
        if v in red and v not in black_a and v not in black_b:
            color[v] = "red"
        elif v in black_a and v in black_b and v not in red:
            color[v] = "black"
        else:
            raise NotCanonical(f"vertex {v} is neither red nor black")
    return Canonical4(color=color, filler=filler)


def is_canonical_4ap8(inst: Instance, clusters: Sequence[Collection[int]]) -> bool:
    try:
        parse_canonical_4ap8(inst, clusters)
        return True
    except NotCanonical:
        return False


def solution_to_vc_4ap8(inst: Instance, clusters: Sequence[Collection[int]]) -> VertexCover:
    """Extract the cover: the red vertices of a canonical clustering."""
    parsed = parse_canonical_4ap8(inst, clusters)
    vertices = {v for v, col in parsed.color.items() if col == "red"}
    g = CubicGraph(n=inst.params["n"], edges=inst.params["edges"])
    return check_cover(g, vertices)


def canonicalize_4ap8(inst: Instance, clusters: Sequence[Collection[int]]) -> List[tuple]:
    """Rebuild a feasible clustering into canonical form, never raising cost.

    Stages, in order: (1) merge every cluster whose rows all cost 8 into
    one filler; (2) if a vertex still has more than two host clusters,
    push its cost-8 hosts into the filler; (3) pull vertex rows out of
    the filler, either into their other host or as their own cluster;
    (4) resolve the two remaining non-canonical shapes into red/black.
    """
    if not is_feasible(inst, clusters):
        raise Infeasible("input clustering violates the size->=k constraint")
    ri = RowIndex(inst)
    prov = inst.provenance
    n = inst.params["n"]

    work: List[Set[int]] = [set(c) for c in clusters]

    # Stage 1: one filler cluster out of every all-columns-suppressed cluster.
    filler: Set[int] = set()
    kept: List[Set[int]] = []
    for c in work:
        if suppressed_columns(inst, c) == WIDTH:
            filler |= c
        else:
            kept.append(c)
    work = kept

    def hosts_of(v: int) -> List[Set[int]]:
        vrows = set(ri.vertex_rows[v])
        return [c for c in work if c & vrows]

    # Stage 2: a vertex hosted by more than two clusters sheds its
    # cost-8 hosts into the filler.  (Stage 1 normally leaves nothing
    # for this stage to do.)
    changed = True
    while changed:
        changed = False
        for v in range(n):
            hs = hosts_of(v)
            extra = int(bool(filler & set(ri.vertex_rows[v])))
            if len(hs) + extra > 2:
                for c in hs:
                    if suppressed_columns(inst, c) == WIDTH:
                        filler |= c
                        work.remove(c)
                        changed = True

    # Stage 3: no vertex row stays in the filler.
    for v in range(n):
        vrows = set(ri.vertex_rows[v])
        in_filler = filler & vrows
        if not in_filler:
            continue
        hs = hosts_of(v)
        filler -= in_filler
        if hs:
            hs[0] |= in_filler
        else:
            work.append(set(vrows))

    # Stage 4: each vertex now has one or two hosts inside its own
    # row family; rewrite them as red or black.
    out: List[tuple] = []
    done: Set[int] = set()
    for v in range(n):
        vrows = set(ri.vertex_rows[v])
        hs = hosts_of(v)
        if len(hs) == 1:
            c = hs[0]
            x = c - vrows
            if not x:
                out.append(tuple(sorted(c)))  # red
            else:
                out.append(tuple(sorted(vrows)))  # red, spill X to the filler
                filler |= x
            work.remove(c)
        elif len(hs) == 2:
            sizes = sorted((len(c & vrows), len(c - vrows)) for c in hs)
            if sizes == [(1, 3), (4, 0)]:
                for c in hs:
                    out.append(tuple(sorted(c)))  # already black
                    work.remove(c)
            else:
                out += build_black(inst, v, index=ri)
                for c in hs:
                    work.remove(c)
        else:
            raise AssertionError(f"vertex {v} has {len(hs)} hosts after stage 3")
        done.add(v)
    for c in work:
        raise AssertionError(f"unclassified cluster remained: {sorted(c)}")
    out.append(tuple(sorted(filler)))
    check_partition(inst, out)
    return out


@dataclass
class LocalityReport:
    violations: List[tuple]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_locality(inst: Instance, clusters: Sequence[Collection[int]]) -> LocalityReport:
    """Check the two structural facts every feasible clustering must satisfy.

    A cluster whose rows cost less than 8 stays inside one vertex's row
    family (its 5 vertex rows plus its 3 edge rows), and every vertex
    row loses at least three even-position entries outside its block.
    """
    if inst.provenance is None:
        raise MissingProvenance("instance has no provenance")
    check_partition(inst, clusters)
    prov = inst.provenance
    blocks = inst.params["blocks"]
    violations: List[tuple] = []
    for ci, c in enumerate(clusters):
        members = sorted(c)
        rows = [inst.rows[i] for i in members]
        suppressed = [col for col in range(WIDTH) if len({r[col] for r in rows}) > 1]
        if len(suppressed) < WIDTH:
            families = set()
            for i in members:
                p = prov[i]
                if isinstance(p, VertexRowProv):
                    families.add(frozenset([p.v]))
                elif isinstance(p, EdgeRowProv):
                    families.add(frozenset([p.u, p.v]))
                else:
                    families.add(frozenset())
            if not set.intersection(*(set(f) for f in families)):
                violations.append(("locality", ci, members))
        for i in members:
            p = prov[i]
            if isinstance(p, VertexRowProv):
                bcols = set(block_columns(blocks[p.v]))
                even_outside = [
                    col for col in suppressed if col % 2 == 1 and col not in bcols
                ]
                if len(even_outside) < 3:
                    violations.append(("even-entries", ci, i, len(even_outside)))
    return LocalityReport(violations=violations)
