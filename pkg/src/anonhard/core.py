"""Suppression-based anonymity cost model.

Rows are fixed-length vectors of symbols.  A clustering groups rows into
sets of size at least ``k``; within each cluster, every column where the
rows disagree must be suppressed in all of them.  The cost of a cluster
is ``|cluster| * (number of suppressed columns)`` and the cost of a
clustering is the sum over its clusters.

Symbols are tagged tuples so that symbols from different families can
never compare equal:

* ``("b", 0)`` / ``("b", 1)``       -- binary values
* ``("a", i)``                      -- per-vertex symbol
* ``("ar", i, h)``                  -- per-vertex-row symbol
* ``("t", i, j)``                   -- per-edge symbol
* ``("u", i)``                      -- free-row symbol

All costs are exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Collection, Iterable, Optional, Sequence

from .errors import EmptyCluster, Infeasible, InvalidPartition, LengthMismatch

Symbol = tuple
Row = tuple  # tuple of Symbol

BIT0: Symbol = ("b", 0)
BIT1: Symbol = ("b", 1)


def bit(v: int) -> Symbol:
    if v not in (0, 1):
        raise ValueError(f"binary symbol must be 0 or 1, got {v!r}")
    return BIT1 if v else BIT0


def vertex_sym(i: int) -> Symbol:
    return ("a", i)


def vertex_row_sym(i: int, h: int) -> Symbol:
    return ("ar", i, h)


def edge_sym(i: int, j: int) -> Symbol:
    if i > j:
        i, j = j, i
    return ("t", i, j)


def free_sym(i: int) -> Symbol:
    return ("u", i)


def hamming(r1: Row, r2: Row) -> int:
    """Number of positions where the two rows differ."""
    if len(r1) != len(r2):
        raise LengthMismatch(f"row lengths differ: {len(r1)} vs {len(r2)}")
    return sum(1 for a, b in zip(r1, r2) if a != b)


@dataclass(frozen=True)
class Instance:
    """An anonymity instance: a table of equal-length rows plus ``k``.

    ``provenance`` (optional) records which gadget produced each row; it
    is populated by the reduction builders.  ``params`` carries reduction
    metadata such as the source-graph size and the block layout.
    """

    rows: tuple
    k: int
    provenance: Optional[tuple] = None
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        if len(self.rows) < self.k:
            raise Infeasible(
                f"instance has {len(self.rows)} rows but k={self.k}"
            )
        width = len(self.rows[0])
        for r in self.rows:
            if len(r) != width:
                raise LengthMismatch("all rows must have equal length")
        if self.provenance is not None and len(self.provenance) != len(self.rows):
            raise InvalidPartition("provenance must cover every row exactly once")
        # Bitmask cache for binary instances: hamming and cluster costs
        # reduce to integer bit operations, which matters for the
        # exhaustive pairwise scans on the larger reduction instances.
        masks = None
        if all(s[0] == "b" for r in self.rows for s in r):
            masks = tuple(
                sum(1 << p for p, s in enumerate(r) if s == BIT1) for r in self.rows
            )
        object.__setattr__(self, "_masks", masks)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return len(self.rows[0])

    @property
    def masks(self):
        """Per-row bitmasks, or None if any symbol is non-binary."""
        return self._masks


def check_partition(inst: Instance, clusters: Sequence[Collection[int]]) -> None:
    """Raise InvalidPartition unless ``clusters`` partitions all row indices."""
    seen: set = set()
    total = 0
    for c in clusters:
        for idx in c:
            if not (0 <= idx < inst.n_rows):
                raise InvalidPartition(f"row index {idx} out of range")
            total += 1
            seen.add(idx)
        if not c:
            raise InvalidPartition("empty cluster in partition")
    if total != len(seen):
        raise InvalidPartition("overlapping clusters")
    if len(seen) != inst.n_rows:
        raise InvalidPartition("partition does not cover every row")


def suppressed_columns(inst: Instance, cluster: Collection[int]) -> int:
    """Number of columns where the cluster's rows do not all agree."""
    idxs = list(cluster)
    if not idxs:
        raise EmptyCluster("cluster is empty")
    if inst.masks is not None:
        m_or = 0
        m_and = inst.masks[idxs[0]]
        for i in idxs:
            m = inst.masks[i]
            m_or |= m
            m_and &= m
        return (m_or ^ m_and).bit_count()
    rows = [inst.rows[i] for i in idxs]
    return sum(1 for col in zip(*rows) if len(set(col)) > 1)


def cluster_cost(inst: Instance, cluster: Collection[int]) -> int:
    """|cluster| times the number of suppressed columns."""
    return len(cluster) * suppressed_columns(inst, cluster)


def clustering_cost(inst: Instance, clusters: Sequence[Collection[int]]) -> int:
    check_partition(inst, clusters)
    return sum(cluster_cost(inst, c) for c in clusters)


def cluster_lower_bound(inst: Instance, cluster: Collection[int]) -> int:
    """|cluster| times the maximum pairwise Hamming distance.

    Never exceeds cluster_cost: every differing position of the extremal
    pair is suppressed in each row of the cluster.
    """
    idxs = list(cluster)
    if not idxs:
        raise EmptyCluster("cluster is empty")
    worst = 0
    if inst.masks is not None:
        ms = [inst.masks[i] for i in idxs]
        for a in range(len(ms)):
            for b in range(a + 1, len(ms)):
                d = (ms[a] ^ ms[b]).bit_count()
                if d > worst:
                    worst = d
    else:
        for a in range(len(idxs)):
            for b in range(a + 1, len(idxs)):
                d = hamming(inst.rows[idxs[a]], inst.rows[idxs[b]])
                if d > worst:
                    worst = d
    return len(idxs) * worst


def is_feasible(inst: Instance, clusters: Sequence[Collection[int]]) -> bool:
    check_partition(inst, clusters)
    return all(len(c) >= inst.k for c in clusters)


def normalize_cluster_sizes(
    inst: Instance, clusters: Sequence[Collection[int]]
) -> list:
    """Split oversized clusters so every size lands in [k, 2k-1].

    Clusters already in range pass through unchanged.  A larger cluster
    is split by repeatedly peeling off its first k rows in index order;
    any split of a cluster never adds suppressed columns to a part, so
    the total cost never increases.
    """
    check_partition(inst, clusters)
    k = inst.k
    for c in clusters:
        if len(c) < k:
            raise Infeasible(f"cluster of size {len(c)} violates k={k}")
    out = []
    for c in clusters:
        members = sorted(c)
        while len(members) > 2 * k - 1:
            out.append(tuple(members[:k]))
            members = members[k:]
        out.append(tuple(members))
    return out


def clusters_as_tuples(clusters: Iterable[Collection[int]]) -> list:
    """Normalize a clustering to sorted index tuples (for JSON and tests)."""
    return [tuple(sorted(c)) for c in clusters]
