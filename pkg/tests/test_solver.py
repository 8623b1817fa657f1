import random

import pytest

from anonhard import core, solver
from anonhard.errors import TooLarge


def rows_from_bits(*bitstrings):
    return tuple(tuple(core.bit(int(ch)) for ch in s) for s in bitstrings)


def random_instance(rng, n, width, k):
    rows = tuple(
        tuple(core.bit(rng.randint(0, 1)) for _ in range(width)) for _ in range(n)
    )
    return core.Instance(rows=rows, k=k)


def test_exact_on_obvious_instance():
    # Two identical pairs: pairing them up costs nothing.
    inst = core.Instance(
        rows=rows_from_bits("0000", "0000", "1111", "1111"), k=2
    )
    result = solver.exact_kap(inst)
    assert result.cost == 0
    assert sorted(result.clustering) == [(0, 1), (2, 3)]
    assert result.optimal


def test_exact_forced_merge():
    # Three rows, k=3: the only feasible clustering is everything together.
    inst = core.Instance(rows=rows_from_bits("000", "011", "101"), k=3)
    result = solver.exact_kap(inst)
    assert result.clustering == [(0, 1, 2)]
    assert result.cost == 9


def test_size_limit_guard():
    rng = random.Random(0)
    inst = random_instance(rng, 13, 4, 2)
    with pytest.raises(TooLarge):
        solver.exact_kap(inst)
    with pytest.raises(TooLarge):
        solver.exact_kap_unrestricted(inst, limit=10)


def test_exact_matches_unrestricted_oracle():
    rng = random.Random(42)
    for _ in range(40):
        n = rng.randint(4, 8)
        k = rng.choice([2, 3])
        inst = random_instance(rng, n, rng.randint(3, 6), k)
        a = solver.exact_kap(inst)
        b = solver.exact_kap_unrestricted(inst)
        assert a.cost == b.cost
        assert core.is_feasible(inst, a.clustering)
        assert core.clustering_cost(inst, a.clustering) == a.cost


def test_greedy_is_feasible_and_never_beats_exact():
    rng = random.Random(5)
    for _ in range(30):
        inst = random_instance(rng, rng.randint(4, 9), 5, rng.choice([2, 3]))
        g = solver.greedy_kap(inst)
        assert core.is_feasible(inst, g.clustering)
        assert not g.optimal
        if inst.n_rows <= 8:
            assert g.cost >= solver.exact_kap(inst).cost


def test_random_feasible_clustering_respects_size_bounds():
    rng = random.Random(9)
    for _ in range(50):
        inst = random_instance(rng, rng.randint(6, 20), 4, rng.choice([2, 3, 4]))
        s = solver.random_feasible_clustering(inst, rng)
        assert core.is_feasible(inst, s)
        assert all(inst.k <= len(c) <= 2 * inst.k - 1 for c in s)
