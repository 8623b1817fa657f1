"""Binary k=3 instance built from a cubic graph via gadget rows.

Every source vertex v becomes a vertex gadget with a 7-vertex core
(labels 1..7, where 1..3 are docking vertices), 9 core edges, and 3
sets of 4 parallel jolly edges.  Every source edge becomes a single
edge-gadget row docked at one docking vertex of each endpoint gadget.
Each edge of this gadget graph is one binary row of length 30n:

* core edge (x, y) of gadget v      -> weight-9 row
* jolly edge at docking vertex x    -> weight-14 row (4 identical copies)
* edge gadget between two gadgets   -> weight-12 row

A cover of size p in the source graph corresponds exactly to a
canonical clustering of cost 99p + 81(n-p) + 12m, where gadgets of
covered vertices take the "type b" shape (row cost 99) and the rest
take "type a" (cost 81), with every edge-gadget row contributing a
virtual cost of 12 inside some type-b docking cluster.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Collection, Dict, List, Optional, Sequence, Tuple

from .core import (
    BIT0,
    BIT1,
    Instance,
    Row,
    check_partition,
    cluster_cost,
    is_feasible,
    normalize_cluster_sizes,
    suppressed_columns,
)
from .errors import (
    IndexOutOfRange,
    Infeasible,
    MissingProvenance,
    NoEdgeGadgetAssigned,
    NotACover,
    NotCanonical,
)
from .graphs import CubicGraph, VertexCover, check_cover

# Core edges of one gadget, as unordered pairs of core-vertex labels.
# Docking vertices 1, 2, 3 have exactly two incident core edges each;
# vertices 4, 5, 7 (the type-a cluster centers) and 6 (the type-b
# center) have exactly three.  The edge set is triangle-free.
CORE_EDGES: Tuple[Tuple[int, int], ...] = (
    (1, 4),
    (2, 4),
    (2, 5),
    (3, 5),
    (1, 7),
    (3, 7),
    (4, 6),
    (5, 6),
    (6, 7),
)

# Core neighbors of each docking vertex (used by the jolly-row encoding).
DOCK_NEIGHBORS: Dict[int, Tuple[int, int]] = {1: (4, 7), 2: (4, 5), 3: (5, 7)}

ROWS_PER_GADGET = 21  # 9 core rows + 3 docking vertices * 4 jolly copies


@dataclass(frozen=True)
class BlockLayout3:
    """Column layout: n vertex blocks of 21, a 6n jolly block, a 3n edge block."""

    n: int

    @property
    def width(self) -> int:
        return 30 * self.n

    @property
    def jolly_offset(self) -> int:
        return 21 * self.n

    @property
    def edge_offset(self) -> int:
        return 27 * self.n


@dataclass(frozen=True)
class CoreEdgeProv:
    v: int  # source vertex (0-based)
    x: int  # core-vertex labels, x < y
    y: int


@dataclass(frozen=True)
class JollyProv:
    v: int
    dock: int  # docking vertex label 1..3
    copy: int  # 1..4


@dataclass(frozen=True)
class EdgeGadgetProv:
    u: int  # source edge (u, v) with u < v
    v: int
    x: int  # docking vertex at gadget u
    y: int  # docking vertex at gadget v


def _zero_row(layout: BlockLayout3) -> Row:
    return (BIT0,) * layout.width


def _set_ones(r: Row, positions) -> Row:
    out = list(r)
    for p in positions:
        out[p] = BIT1
    return tuple(out)


def encode_vertex(layout: BlockLayout3, i: int, j: int, r: Row) -> Row:
    """Set the three positions of core vertex j in vertex block i (both 1-based)."""
    if not (1 <= i <= layout.n) or not (1 <= j <= 7):
        raise IndexOutOfRange(f"vertex encoding ({i},{j}) out of range for n={layout.n}")
    base = 21 * (i - 1) + 3 * (j - 1)
    return _set_ones(r, (base, base + 1, base + 2))


def encode_gadget(layout: BlockLayout3, i: int, r: Row) -> Row:
    """Set the three edge-block positions of gadget i (1-based)."""
    if not (1 <= i <= layout.n):
        raise IndexOutOfRange(f"gadget encoding {i} out of range for n={layout.n}")
    base = layout.edge_offset + 3 * (i - 1)
    return _set_ones(r, (base, base + 1, base + 2))


def encode_jolly(layout: BlockLayout3, i: int, x: int, r: Row) -> Row:
    """Set the two jolly-block positions of jolly vertex x of gadget i (1-based)."""
    if not (1 <= i <= layout.n) or not (1 <= x <= 3):
        raise IndexOutOfRange(f"jolly encoding ({i},{x}) out of range for n={layout.n}")
    base = layout.jolly_offset + 6 * (i - 1) + (x - 1)
    return _set_ones(r, (base, base + 1))


def docking_assignment(g: CubicGraph) -> Dict[int, Dict[int, Tuple[int, int]]]:
    """Per vertex, map docking labels 1..3 to incident source edges.

    Incident edges are assigned by ascending neighbor index, so the
    instance is byte-reproducible.
    """
    out: Dict[int, Dict[int, Tuple[int, int]]] = {}
    for v in range(g.n):
        incident = sorted(g.incident_edges(v), key=lambda e: e[0] + e[1] - v)
        out[v] = {x + 1: incident[x] for x in range(3)}
    return out


def build_3abp_instance(g: CubicGraph) -> Instance:
    """21n + m binary rows of length 30n, k = 3, with full provenance."""
    layout = BlockLayout3(g.n)
    dock = docking_assignment(g)
    # Invert: for a source edge, which docking vertex hosts it at each endpoint.
    edge_dock: Dict[Tuple[int, int], Dict[int, int]] = {e: {} for e in g.edges}
    for v, slots in dock.items():
        for x, e in slots.items():
            edge_dock[e][v] = x

    rows: List[Row] = []
    prov: List[object] = []
    for v in range(g.n):
        i = v + 1
        for x, y in CORE_EDGES:
            r = encode_gadget(
                layout, i, encode_vertex(layout, i, y, encode_vertex(layout, i, x, _zero_row(layout)))
            )
            rows.append(r)
            prov.append(CoreEdgeProv(v, x, y))
        for x in (1, 2, 3):
            n1, n2 = DOCK_NEIGHBORS[x]
            r = _zero_row(layout)
            for j in (x, n1, n2):
                r = encode_vertex(layout, i, j, r)
            r = encode_jolly(layout, i, x, encode_gadget(layout, i, r))
            for copy in (1, 2, 3, 4):
                rows.append(r)
                prov.append(JollyProv(v, x, copy))
    for u, v in g.edges:
        x = edge_dock[(u, v)][u]
        y = edge_dock[(u, v)][v]
        r = encode_vertex(layout, v + 1, y, encode_vertex(layout, u + 1, x, _zero_row(layout)))
        r = encode_gadget(layout, v + 1, encode_gadget(layout, u + 1, r))
        rows.append(r)
        prov.append(EdgeGadgetProv(u, v, x, y))

    return Instance(
        rows=tuple(rows),
        k=3,
        provenance=tuple(prov),
        params={"reduction": "3abp", "n": g.n, "m": g.m, "edges": g.edges},
    )


class GadgetIndex:
    """Row-index lookup tables derived from an instance's provenance."""

    def __init__(self, inst: Instance):
        if inst.provenance is None:
            raise MissingProvenance("instance has no provenance")
        self.core: Dict[Tuple[int, int, int], int] = {}
        self.jolly: Dict[Tuple[int, int], List[int]] = {}
        self.eg: Dict[Tuple[int, int], int] = {}
        self.eg_dock: Dict[Tuple[int, int], Tuple[int, int]] = {}
        self.dock_eg: Dict[Tuple[int, int], Tuple[int, int]] = {}
        gadgets = set()
        for idx, p in enumerate(inst.provenance):
            if isinstance(p, CoreEdgeProv):
                self.core[(p.v, p.x, p.y)] = idx
                gadgets.add(p.v)
            elif isinstance(p, JollyProv):
                self.jolly.setdefault((p.v, p.dock), []).append(idx)
            elif isinstance(p, EdgeGadgetProv):
                e = (p.u, p.v)
                self.eg[e] = idx
                self.eg_dock[e] = (p.x, p.y)
                self.dock_eg[(p.u, p.x)] = e
                self.dock_eg[(p.v, p.y)] = e
            else:
                raise MissingProvenance(f"row {idx} has unexpected provenance {p!r}")
        self.gadgets = sorted(gadgets)

    def core_rows_at(self, v: int, label: int) -> List[int]:
        return [
            self.core[(v, x, y)] for x, y in CORE_EDGES if label in (x, y)
        ]

    def eg_endpoints(self, e: Tuple[int, int]) -> Tuple[int, int]:
        return e


# ---------------------------------------------------------------------------
# Distance catalog
# ---------------------------------------------------------------------------

# case id -> (kind, value); kind "eq" is an exact distance, "ge" a lower bound
CATALOG_EXPECTATIONS = {
    1: ("ge", 18),
    2: ("ge", 14),
    3: ("eq", 6),
    4: ("eq", 12),
    5: ("eq", 5),
    6: ("ge", 11),
    7: ("eq", 9),
    8: ("ge", 15),
    9: ("ge", 18),
    10: ("eq", 24),
    11: ("ge", 12),
    12: ("ge", 11),
}


@dataclass
class DistanceReport:
    counts: Dict[int, int] = field(default_factory=dict)
    violations: List[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _classify_pair(p1, p2) -> Optional[Tuple[int, str, int]]:
    """Catalog case for a row pair, or None for identical jolly copies."""
    if isinstance(p2, CoreEdgeProv) and not isinstance(p1, CoreEdgeProv):
        p1, p2 = p2, p1
    if isinstance(p2, JollyProv) and isinstance(p1, EdgeGadgetProv):
        p1, p2 = p2, p1

    if isinstance(p1, CoreEdgeProv) and isinstance(p2, CoreEdgeProv):
        if p1.v != p2.v:
            case = 1
        elif {p1.x, p1.y} & {p2.x, p2.y}:
            case = 3
        else:
            case = 4
    elif isinstance(p1, CoreEdgeProv) and isinstance(p2, JollyProv):
        if p1.v != p2.v:
            case = 1
        elif p2.dock in (p1.x, p1.y):
            case = 5
        else:
            case = 6
    elif isinstance(p1, CoreEdgeProv) and isinstance(p2, EdgeGadgetProv):
        docked = (p2.u == p1.v and p2.x in (p1.x, p1.y)) or (
            p2.v == p1.v and p2.y in (p1.x, p1.y)
        )
        case = 7 if docked else 8
    elif isinstance(p1, JollyProv) and isinstance(p2, JollyProv):
        if p1.v == p2.v and p1.dock == p2.dock:
            return None  # same jolly set: identical rows
        case = 11
    elif isinstance(p1, JollyProv) and isinstance(p2, EdgeGadgetProv):
        case = 2
    else:  # two edge gadgets
        if {p1.u, p1.v} & {p2.u, p2.v}:
            case = 9
        else:
            case = 10
    kind, value = CATALOG_EXPECTATIONS[case]
    return case, kind, value


def _touches_dock(p, v: int, dock: int) -> bool:
    """Whether a row's edge is incident on docking vertex `dock` of gadget v."""
    if isinstance(p, CoreEdgeProv):
        return p.v == v and dock in (p.x, p.y)
    if isinstance(p, JollyProv):
        return p.v == v and p.dock == dock
    return (p.u == v and p.x == dock) or (p.v == v and p.y == dock)


def verify_distance_catalog(inst: Instance) -> DistanceReport:
    """Exhaustively check every row pair against the 12-case distance catalog."""
    if inst.provenance is None:
        raise MissingProvenance("instance has no provenance")
    masks = inst.masks
    prov = inst.provenance
    report = DistanceReport(counts={c: 0 for c in CATALOG_EXPECTATIONS})
    report.counts[0] = 0  # identical jolly copies
    n_rows = inst.n_rows
    for a in range(n_rows):
        for b in range(a + 1, n_rows):
            d = (masks[a] ^ masks[b]).bit_count()
            got = _classify_pair(prov[a], prov[b])
            if got is None:
                report.counts[0] += 1
                if d != 0:
                    report.violations.append((0, a, b, 0, d))
                continue
            case, kind, value = got
            report.counts[case] += 1
            bad = d != value if kind == "eq" else d < value
            if bad:
                report.violations.append((case, a, b, value, d))
            # Case 12 restates the jolly bound for any non-incident row.
            for pj, po, other in ((prov[a], prov[b], b), (prov[b], prov[a], a)):
                if isinstance(pj, JollyProv) and not _touches_dock(po, pj.v, pj.dock):
                    report.counts[12] += 1
                    if d < 11:
                        report.violations.append((12, a, b, 11, d))
    return report


# ---------------------------------------------------------------------------
# Canonical solutions
# ---------------------------------------------------------------------------

def build_type_a(inst: Instance, v: int, index: Optional[GadgetIndex] = None) -> List[tuple]:
    """Six clusters for gadget v: core triples at labels 4, 5, 7 plus the
    three 4-row jolly sets.  Total cost 81."""
    gi = index or GadgetIndex(inst)
    clusters = [tuple(sorted(gi.core_rows_at(v, c))) for c in (4, 5, 7)]
    clusters += [tuple(sorted(gi.jolly[(v, x)])) for x in (1, 2, 3)]
    return clusters


def build_type_b(
    inst: Instance,
    v: int,
    gadget_choice: Dict[int, str],
    index: Optional[GadgetIndex] = None,
) -> List[tuple]:
    """Seven clusters for gadget v in the covered shape.

    ``gadget_choice`` maps each docking label 1..3 to "eg" (cluster the
    edge gadget docked there) or "jolly" (cluster one jolly copy
    instead); at least one docking vertex must take its edge gadget.
    Row cost for the gadget is 99; each included edge gadget adds a
    virtual cost of 12.
    """
    if set(gadget_choice) != {1, 2, 3}:
        raise ValueError("gadget_choice must cover docking labels 1, 2, 3")
    if "eg" not in gadget_choice.values():
        raise NoEdgeGadgetAssigned(f"type b for gadget {v} has no edge gadget")
    gi = index or GadgetIndex(inst)
    clusters = [tuple(sorted(gi.core_rows_at(v, 6)))]
    for x in (1, 2, 3):
        dock_rows = sorted(
            i for i in gi.core_rows_at(v, x)
        )
        jolly_rows = gi.jolly[(v, x)]
        if gadget_choice[x] == "eg":
            extra = gi.eg[gi.dock_eg[(v, x)]]
            leftover = jolly_rows
        else:
            extra = jolly_rows[0]
            leftover = jolly_rows[1:]
        clusters.append(tuple(sorted(dock_rows + [extra])))
        clusters.append(tuple(sorted(leftover)))
    return clusters


def virtual_cost(inst: Instance, clusters: Sequence[Collection[int]], row_index: int) -> Fraction:
    """Cluster cost split evenly over the cluster's non-jolly rows; 0 for jolly rows."""
    if inst.provenance is None:
        raise MissingProvenance("virtual cost needs provenance")
    check_partition(inst, clusters)
    if isinstance(inst.provenance[row_index], JollyProv):
        return Fraction(0)
    for c in clusters:
        if row_index in c:
            non_jolly = sum(
                1 for i in c if not isinstance(inst.provenance[i], JollyProv)
            )
            return Fraction(cluster_cost(inst, c), non_jolly)
    raise MissingProvenance(f"row {row_index} not found in clustering")


def _saturating_assignment(
    edges: Sequence[Tuple[int, int]], hosts: Sequence[int], allowed: Dict[Tuple[int, int], set]
) -> Dict[Tuple[int, int], int]:
    """Assign each edge to one allowed host so every host gets >= 1 edge.

    Uses augmenting paths to match every host to a distinct edge first
    (a cubic graph always satisfies Hall's condition here), then sends
    every remaining edge to its lowest-indexed allowed host.
    """
    match_of_edge: Dict[Tuple[int, int], int] = {}

    def augment(h: int, visited: set) -> bool:
        for e in edges:
            if h in allowed[e] and e not in visited:
                visited.add(e)
                if e not in match_of_edge or augment(match_of_edge[e], visited):
                    match_of_edge[e] = h
                    return True
        return False

    for h in sorted(hosts):
        if not augment(h, set()):
            raise NotACover(f"no edge gadget can be assigned to gadget {h}")
    assignment = dict(match_of_edge)
    for e in edges:
        if e not in assignment:
            assignment[e] = min(allowed[e])
    return assignment


def vc_to_solution_3abp(inst: Instance, cover: VertexCover) -> List[tuple]:
    """Canonical clustering of cost 99p + 81(n-p) + 12m for a size-p cover."""
    gi = GadgetIndex(inst)
    n = inst.params["n"]
    covered = sorted(cover.vertices)
    edges = sorted(gi.eg)
    for u, v in edges:
        if u not in cover.vertices and v not in cover.vertices:
            raise NotACover(f"edge ({u},{v}) is uncovered")
    allowed = {e: set(e) & cover.vertices for e in edges}
    assignment = _saturating_assignment(edges, covered, allowed)

    clusters: List[tuple] = []
    for v in range(n):
        if v in cover.vertices:
            choice = {}
            for x in (1, 2, 3):
                e = gi.dock_eg.get((v, x))
                choice[x] = "eg" if e is not None and assignment[e] == v else "jolly"
            clusters += build_type_b(inst, v, choice, index=gi)
        else:
            clusters += build_type_a(inst, v, index=gi)
    return clusters


@dataclass
class Canonical3:
    """Parsed canonical structure: gadget shapes plus edge-gadget hosts."""

    gadget_type: Dict[int, str]  # v -> "a" | "b"
    eg_host: Dict[Tuple[int, int], int]  # source edge -> hosting gadget


def parse_canonical_3abp(inst: Instance, clusters: Sequence[Collection[int]]) -> Canonical3:
    """Recognize a canonical clustering or raise NotCanonical naming the cluster."""
    if inst.provenance is None:
        raise MissingProvenance("instance has no provenance")
    check_partition(inst, clusters)
    prov = inst.provenance

    centers: Dict[int, set] = {}  # v -> core-cluster center labels seen
    docking: Dict[int, Dict[int, str]] = {}  # v -> dock -> "eg"|"jolly"
    jolly_sizes: Dict[Tuple[int, int], List[int]] = {}
    eg_host: Dict[Tuple[int, int], int] = {}

    for ci, c in enumerate(clusters):
        members = sorted(c)
        ps = [prov[i] for i in members]
        kinds = {type(p) for p in ps}
        if kinds == {JollyProv}:
            sets = {(p.v, p.dock) for p in ps}
            if len(sets) != 1 or not (3 <= len(ps) <= 4):
                raise NotCanonical(f"cluster {ci} is not a single jolly set")
            jolly_sizes.setdefault(next(iter(sets)), []).append(len(ps))
            continue
        core_ps = [p for p in ps if isinstance(p, CoreEdgeProv)]
        other_ps = [p for p in ps if not isinstance(p, CoreEdgeProv)]
        if not core_ps or len({p.v for p in core_ps}) != 1:
            raise NotCanonical(f"cluster {ci} mixes gadgets or lacks core rows")
        v = core_ps[0].v
        common = set.intersection(*({p.x, p.y} for p in core_ps))
        if len(core_ps) == 3 and not other_ps:
            if len(common) != 1:
                raise NotCanonical(f"cluster {ci}: three core rows without a center")
            label = common.pop()
            if label not in (4, 5, 6, 7):
                raise NotCanonical(f"cluster {ci}: invalid center {label}")
            centers.setdefault(v, set()).add(label)
            continue
        if len(core_ps) == 2 and len(other_ps) == 1:
            dock = next((d for d in common if d in (1, 2, 3)), None)
            extra = other_ps[0]
            if dock is None:
                raise NotCanonical(f"cluster {ci}: no common docking vertex")
            if isinstance(extra, JollyProv) and extra.v == v and extra.dock == dock:
                docking.setdefault(v, {})[dock] = "jolly"
                continue
            if isinstance(extra, EdgeGadgetProv) and _touches_dock(extra, v, dock):
                docking.setdefault(v, {})[dock] = "eg"
                eg_host[(extra.u, extra.v)] = v
                continue
        raise NotCanonical(f"cluster {ci} matches no canonical shape")

    gadget_type: Dict[int, str] = {}
    for v in range(inst.params["n"]):
        cs = centers.get(v, set())
        docks = docking.get(v, {})
        jsz = {x: sorted(jolly_sizes.get((v, x), [])) for x in (1, 2, 3)}
        if cs == {4, 5, 7} and not docks:
            if any(jsz[x] != [4] for x in (1, 2, 3)):
                raise NotCanonical(f"gadget {v}: type a with consumed jolly rows")
            gadget_type[v] = "a"
        elif cs == {6} and set(docks) == {1, 2, 3}:
            for x in (1, 2, 3):
                want = [3] if docks[x] == "jolly" else [4]
                if jsz[x] != want:
                    raise NotCanonical(f"gadget {v}: docking {x} jolly accounting is off")
            if "eg" not in docks.values():
                raise NotCanonical(f"gadget {v}: type b without an edge gadget")
            gadget_type[v] = "b"
        else:
            raise NotCanonical(f"gadget {v} is neither type a nor type b")
    return Canonical3(gadget_type=gadget_type, eg_host=eg_host)


def is_canonical_3abp(inst: Instance, clusters: Sequence[Collection[int]]) -> bool:
    try:
        parse_canonical_3abp(inst, clusters)
        return True
    except NotCanonical:
        return False


def solution_to_vc_3abp(inst: Instance, clusters: Sequence[Collection[int]]) -> VertexCover:
    """Extract the cover: the set of type-b gadgets of a canonical clustering."""
    parsed = parse_canonical_3abp(inst, clusters)
    vertices = {v for v, t in parsed.gadget_type.items() if t == "b"}
    g = CubicGraph(n=inst.params["n"], edges=inst.params["edges"])
    return check_cover(g, vertices)


def canonical_cost_formula(n: int, m: int, p: int) -> int:
    return 99 * p + 81 * (n - p) + 12 * m


def _min_gadget_cover(unmarked_egs: List[Tuple[int, int]]) -> List[int]:
    """Smallest set of gadgets covering every edge; lexicographic tie-break."""
    endpoints = sorted({v for e in unmarked_egs for v in e})
    for size in range(1, len(endpoints) + 1):
        for combo in combinations(endpoints, size):
            chosen = set(combo)
            if all(u in chosen or v in chosen for u, v in unmarked_egs):
                return list(combo)
    raise AssertionError("unreachable: endpoints always cover")


def canonicalize_3abp(inst: Instance, clusters: Sequence[Collection[int]]) -> List[tuple]:
    """Rebuild a feasible clustering into canonical form, never raising cost.

    The input is first normalized so every cluster has 3 to 5 rows.
    Then the marking loop repeatedly takes the lowest-indexed cluster
    holding an unmarked edge gadget, covers its unmarked edge gadgets
    with a minimum set of vertex gadgets, emits type-b solutions for
    those gadgets together with all their unmarked edge gadgets, and
    marks everything placed.  Unmarked gadgets finish as type a.
    """
    if not is_feasible(inst, clusters):
        raise Infeasible("input clustering violates the size->=k constraint")
    work = normalize_cluster_sizes(inst, clusters)
    gi = GadgetIndex(inst)
    prov = inst.provenance

    eg_of_cluster: List[List[Tuple[int, int]]] = []
    for c in work:
        egs = [
            (prov[i].u, prov[i].v)
            for i in sorted(c)
            if isinstance(prov[i], EdgeGadgetProv)
        ]
        eg_of_cluster.append(egs)

    marked_eg: set = set()
    marked_gadget: set = set()
    out: List[tuple] = []

    while True:
        target = None
        for ci, egs in enumerate(eg_of_cluster):
            if any(e not in marked_eg for e in egs):
                target = ci
                break
        if target is None:
            break
        cluster = sorted(work[target])
        u_c = [e for e in eg_of_cluster[target] if e not in marked_eg]

        non_eg_gadgets = {
            prov[i].v for i in cluster if not isinstance(prov[i], EdgeGadgetProv)
        }
        if (
            len(u_c) == 1
            and len(eg_of_cluster[target]) == 1
            and len(non_eg_gadgets) == 1
            and next(iter(non_eg_gadgets)) in u_c[0]
        ):
            # A lone edge gadget clustered only with rows of one of its
            # endpoint gadgets keeps that gadget as the cover.
            v_c = [next(iter(non_eg_gadgets))]
        else:
            v_c = _min_gadget_cover(u_c)

        e_prime = sorted(
            e for e in gi.eg if e not in marked_eg and (e[0] in v_c or e[1] in v_c)
        )
        allowed = {e: set(e) & set(v_c) for e in e_prime}
        assignment = _saturating_assignment(e_prime, v_c, allowed)
        for v in sorted(v_c):
            choice = {}
            for x in (1, 2, 3):
                e = gi.dock_eg.get((v, x))
                choice[x] = (
                    "eg" if e in assignment and assignment[e] == v else "jolly"
                )
            out += build_type_b(inst, v, choice, index=gi)
        marked_eg.update(e_prime)
        marked_gadget.update(v_c)

    for v in range(inst.params["n"]):
        if v not in marked_gadget:
            out += build_type_a(inst, v, index=gi)
    return out


def gadget_core_structure_ok(v: int = 0) -> bool:
    """Structural sanity of the fixed core-edge set: triangle-free, with
    exactly two core edges at each docking vertex."""
    adj: Dict[int, set] = {i: set() for i in range(1, 8)}
    for x, y in CORE_EDGES:
        adj[x].add(y)
        adj[y].add(x)
    for x in (1, 2, 3):
        if len(adj[x]) != 2:
            return False
    for x, y in CORE_EDGES:
        if adj[x] & adj[y]:
            return False
    return True
