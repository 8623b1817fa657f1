"""Exact and heuristic anonymity solvers for desk-scale tables.

``exact_kap`` enumerates only partitions with cluster sizes in
[k, 2k-1]: some optimum always has this shape, because any oversized
cluster can be split without adding suppressed columns to either part.
``exact_kap_unrestricted`` drops the upper bound and serves as the
independent oracle that validates the restriction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Tuple

from .core import (
    Instance,
    cluster_cost,
    clustering_cost,
    normalize_cluster_sizes,
    suppressed_columns,
)
from .errors import TooLarge


@dataclass
class SolveResult:
    clustering: List[tuple]
    cost: int
    optimal: bool
    nodes_explored: int


def _search_partitions(inst: Instance, max_size) -> Tuple[List[tuple], int, int]:
    """Best partition with cluster sizes in [k, max_size(remaining)].

    Enumeration order is deterministic: each block contains the lowest
    unassigned index, blocks are tried smallest-first, companion sets in
    lexicographic order.  The first minimum found in this order wins.
    """
    k = inst.k
    n = inst.n_rows
    cost_memo: Dict[frozenset, int] = {}

    def block_cost(block: tuple) -> int:
        key = frozenset(block)
        if key not in cost_memo:
            cost_memo[key] = len(block) * suppressed_columns(inst, block)
        return cost_memo[key]

    best_cost = None
    best: List[tuple] = []
    nodes = 0

    def rec(remaining: tuple, partial: List[tuple], partial_cost: int) -> None:
        nonlocal best_cost, best, nodes
        if not remaining:
            if best_cost is None or partial_cost < best_cost:
                best_cost = partial_cost
                best = list(partial)
            return
        anchor = remaining[0]
        rest = remaining[1:]
        hi = min(max_size(len(remaining)), len(remaining))
        for size in range(k, hi + 1):
            leftover = len(remaining) - size
            if leftover != 0 and leftover < k:
                continue
            for companions in combinations(rest, size - 1):
                nodes += 1
                block = (anchor,) + companions
                c = partial_cost + block_cost(block)
                if best_cost is not None and c >= best_cost:
                    continue
                partial.append(block)
                rec(tuple(i for i in rest if i not in companions), partial, c)
                partial.pop()

    rec(tuple(range(n)), [], 0)
    assert best_cost is not None
    return best, best_cost, nodes


def exact_kap(inst: Instance, limit: int = 12) -> SolveResult:
    """Minimum-cost clustering over partitions with sizes in [k, 2k-1]."""
    if inst.n_rows > limit:
        raise TooLarge(f"{inst.n_rows} rows exceeds the exact-search limit {limit}")
    clustering, cost, nodes = _search_partitions(inst, lambda rem: 2 * inst.k - 1)
    return SolveResult(clustering=clustering, cost=cost, optimal=True, nodes_explored=nodes)


def exact_kap_unrestricted(inst: Instance, limit: int = 10) -> SolveResult:
    """Full-partition enumeration (any cluster size >= k); the cross-oracle."""
    if inst.n_rows > limit:
        raise TooLarge(f"{inst.n_rows} rows exceeds the exact-search limit {limit}")
    clustering, cost, nodes = _search_partitions(inst, lambda rem: rem)
    return SolveResult(clustering=clustering, cost=cost, optimal=True, nodes_explored=nodes)


def random_feasible_clustering(inst: Instance, rng: random.Random) -> List[tuple]:
    """Uniform-ish random feasible clustering with sizes in [k, 2k-1].

    Shuffles the rows, cuts the sequence into blocks of size k..k+3
    (absorbing any short tail into the final block), then splits any
    oversized block back down with ``normalize_cluster_sizes``.
    """
    k = inst.k
    idxs = list(range(inst.n_rows))
    rng.shuffle(idxs)
    clusters: List[tuple] = []
    pos = 0
    while pos < inst.n_rows:
        size = rng.randint(k, k + 3)
        if 0 < inst.n_rows - pos - size < k:
            size = inst.n_rows - pos
        clusters.append(tuple(sorted(idxs[pos : pos + size])))
        pos += size
    return normalize_cluster_sizes(inst, clusters)


def greedy_kap(inst: Instance) -> SolveResult:
    """Nearest-group agglomeration baseline; feasible but not optimal.

    Repeatedly clusters the lowest unassigned row with its k-1 nearest
    unassigned rows; each leftover row joins the cluster whose cost
    grows the least.
    """
    k = inst.k
    unassigned = list(range(inst.n_rows))
    clusters: List[List[int]] = []
    while len(unassigned) >= k:
        anchor = unassigned[0]
        rest = unassigned[1:]
        if inst.masks is not None:
            rest.sort(key=lambda i: ((inst.masks[anchor] ^ inst.masks[i]).bit_count(), i))
        else:
            anchor_row = inst.rows[anchor]
            rest.sort(
                key=lambda i: (
                    sum(1 for a, b in zip(anchor_row, inst.rows[i]) if a != b),
                    i,
                )
            )
        block = [anchor] + rest[: k - 1]
        clusters.append(sorted(block))
        unassigned = [i for i in unassigned if i not in block]
    for i in unassigned:
        best_ci = min(
            range(len(clusters)),
            key=lambda ci: cluster_cost(inst, clusters[ci] + [i])
            - cluster_cost(inst, clusters[ci]),
        )
        clusters[best_ci].append(i)
        clusters[best_ci].sort()
    result = [tuple(c) for c in clusters]
    return SolveResult(
        clustering=result,
        cost=clustering_cost(inst, result),
        optimal=False,
        nodes_explored=0,
    )
