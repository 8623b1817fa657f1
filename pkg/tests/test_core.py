import pytest

from anonhard import core
from anonhard.errors import (
    EmptyCluster,
    Infeasible,
    InvalidPartition,
    LengthMismatch,
)


def rows_from_bits(*bitstrings):
    return tuple(tuple(core.bit(int(ch)) for ch in s) for s in bitstrings)


def test_symbols_from_distinct_families_never_collide():
    assert core.bit(0) != core.bit(1)
    assert core.vertex_sym(1) != core.vertex_row_sym(1, 1)
    assert core.edge_sym(2, 1) == core.edge_sym(1, 2)
    assert core.free_sym(0) != core.bit(0)
    with pytest.raises(ValueError):
        core.bit(2)


def test_hamming_counts_disagreements():
    r = rows_from_bits("0101", "0011", "0101")
    assert core.hamming(r[0], r[1]) == 2
    assert core.hamming(r[0], r[2]) == 0
    with pytest.raises(LengthMismatch):
        core.hamming(r[0], r[0][:3])


def test_instance_validation():
    rows = rows_from_bits("01", "10")
    with pytest.raises(Infeasible):
        core.Instance(rows=rows, k=3)
    with pytest.raises(ValueError):
        core.Instance(rows=rows, k=0)
    with pytest.raises(LengthMismatch):
        core.Instance(rows=rows_from_bits("01", "100"), k=2)
    inst = core.Instance(rows=rows, k=2)
    assert inst.n_rows == 2 and inst.width == 2
    assert inst.masks == (0b10, 0b01)


def test_masks_absent_for_non_binary_rows():
    rows = (
        (core.vertex_sym(0), core.bit(1)),
        (core.vertex_sym(1), core.bit(1)),
    )
    inst = core.Instance(rows=rows, k=2)
    assert inst.masks is None
    assert core.suppressed_columns(inst, (0, 1)) == 1


def test_suppressed_columns_paths_agree():
    bitstrings = ("0110", "0101", "1100", "0100")
    rows = rows_from_bits(*bitstrings)
    inst_fast = core.Instance(rows=rows, k=2)
    # Same table spelled with a non-binary spectator column appended.
    rows_slow = tuple(r + (core.free_sym(0),) for r in rows)
    inst_slow = core.Instance(rows=rows_slow, k=2)
    for cluster in ((0, 1), (0, 1, 2), (1, 3), (0, 1, 2, 3)):
        assert core.suppressed_columns(inst_fast, cluster) == core.suppressed_columns(
            inst_slow, cluster
        )


def test_cluster_and_clustering_cost():
    inst = core.Instance(rows=rows_from_bits("0000", "0011", "1100", "1111"), k=2)
    assert core.suppressed_columns(inst, (0, 1)) == 2
    assert core.cluster_cost(inst, (0, 1)) == 4
    assert core.clustering_cost(inst, [(0, 1), (2, 3)]) == 8
    assert core.clustering_cost(inst, [(0, 1, 2, 3)]) == 16
    with pytest.raises(EmptyCluster):
        core.suppressed_columns(inst, ())


def test_check_partition_rejects_bad_structures():
    inst = core.Instance(rows=rows_from_bits("00", "01", "10", "11"), k=2)
    with pytest.raises(InvalidPartition):
        core.check_partition(inst, [(0, 1)])  # not covering
    with pytest.raises(InvalidPartition):
        core.check_partition(inst, [(0, 1, 2), (2, 3)])  # overlap
    with pytest.raises(InvalidPartition):
        core.check_partition(inst, [(0, 1, 2, 4)])  # out of range
    with pytest.raises(InvalidPartition):
        core.check_partition(inst, [(0, 1, 2, 3), ()])  # empty cluster


def test_is_feasible_enforces_min_size():
    inst = core.Instance(rows=rows_from_bits("00", "01", "10", "11"), k=2)
    assert core.is_feasible(inst, [(0, 1), (2, 3)])
    assert not core.is_feasible(inst, [(0,), (1, 2, 3)])


def test_cluster_lower_bound_never_exceeds_cost():
    inst = core.Instance(
        rows=rows_from_bits("000000", "000111", "111000", "101010"), k=2
    )
    for cluster in ((0, 1), (0, 1, 2), (0, 1, 2, 3), (2, 3)):
        assert core.cluster_lower_bound(inst, cluster) <= core.cluster_cost(
            inst, cluster
        )


def test_normalize_cluster_sizes_splits_oversized():
    rows = rows_from_bits(*(format(i, "03b") for i in range(8)))
    inst = core.Instance(rows=rows, k=2)
    out = core.normalize_cluster_sizes(inst, [tuple(range(8))])
    assert sorted(len(c) for c in out) == [2, 2, 2, 2]
    assert sorted(i for c in out for i in c) == list(range(8))
    # In-range clusters pass through; oversized ones peel k rows at a time.
    same = core.normalize_cluster_sizes(inst, [(0, 1, 2), (3, 4, 5, 6, 7)])
    assert core.clusters_as_tuples(same) == [(0, 1, 2), (3, 4), (5, 6, 7)]
    with pytest.raises(Infeasible):
        core.normalize_cluster_sizes(inst, [(0,), tuple(range(1, 8))])


def test_normalize_never_increases_cost():
    rows = rows_from_bits("0000", "0001", "0011", "0111", "1111", "1110")
    inst = core.Instance(rows=rows, k=2)
    before = [(0, 1, 2, 3, 4, 5)]
    after = core.normalize_cluster_sizes(inst, before)
    assert core.clustering_cost(inst, after) <= core.clustering_cost(inst, before)
