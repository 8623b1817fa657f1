import random

import pytest

from anonhard import core, graphs, solver
from anonhard import reduction4ap8 as r4
from anonhard.errors import EdgeRowConflict, NotACover


def k4_instance():
    return r4.build_4ap8_instance(graphs.k4())


def test_instance_shape():
    for name in graphs.BUILTIN_GRAPHS:
        g = graphs.builtin(name)
        inst = r4.build_4ap8_instance(g)
        assert inst.k == 4
        assert inst.n_rows == 5 * g.n + g.m + 4, name
        assert inst.width == 8, name


def test_block_assignment_is_a_proper_coloring():
    for name in graphs.BUILTIN_GRAPHS:
        g = graphs.builtin(name)
        blocks = r4.assign_blocks(g)
        assert set(blocks.values()) <= {1, 2, 3, 4}
        for u, v in g.edges:
            assert blocks[u] != blocks[v], (name, u, v)


def test_vertex_rows_agree_exactly_on_evens_and_own_block():
    inst = k4_instance()
    ri = r4.RowIndex(inst)
    blocks = inst.params["blocks"]
    for v, idxs in ri.vertex_rows.items():
        assert len(idxs) == 5
        agree = {
            col
            for col in range(8)
            if len({inst.rows[i][col] for i in idxs}) == 1
        }
        assert agree == {0, 2, 4, 6} | set(r4.block_columns(blocks[v]))


def test_edge_row_matches_both_endpoints_on_their_blocks():
    inst = k4_instance()
    ri = r4.RowIndex(inst)
    blocks = inst.params["blocks"]
    for (u, v), idx in ri.edge_rows.items():
        row = inst.rows[idx]
        for w in (u, v):
            c1, c2 = r4.block_columns(blocks[w])
            assert row[c1] == row[c2] == core.vertex_sym(w)


def test_red_and_black_costs():
    inst = k4_instance()
    ri = r4.RowIndex(inst)
    for v in range(4):
        red = r4.build_red(inst, v, index=ri)
        assert [core.cluster_cost(inst, c) for c in red] == [15]
        black = r4.build_black(inst, v, index=ri)
        assert sorted(core.cluster_cost(inst, c) for c in black) == [12, 24]


def test_black_detects_consumed_edge_rows():
    g = graphs.k4()
    inst = r4.build_4ap8_instance(g)
    ri = r4.RowIndex(inst)
    first = r4.build_black(inst, 0, index=ri)
    taken = set(first[1])
    # Vertices 0 and 1 are adjacent in K4, so they share an edge row.
    with pytest.raises(EdgeRowConflict):
        r4.build_black(inst, 1, index=ri, taken=taken)


def test_vc_roundtrip_and_cost_formula():
    for name in graphs.BUILTIN_GRAPHS:
        g = graphs.builtin(name)
        inst = r4.build_4ap8_instance(g)
        cover = graphs.exact_vertex_cover(g)
        clusters = r4.vc_to_solution_4ap8(inst, cover)
        assert core.is_feasible(inst, clusters)
        assert core.clustering_cost(inst, clusters) == r4.canonical_cost_formula(
            g.n, g.m, len(cover)
        )
        assert r4.is_canonical_4ap8(inst, clusters)
        back = r4.solution_to_vc_4ap8(inst, clusters)
        assert back.vertices == cover.vertices, name


def test_filler_costs_eight_per_member():
    inst = k4_instance()
    cover = graphs.exact_vertex_cover(graphs.k4())
    clusters = r4.vc_to_solution_4ap8(inst, cover)
    parsed = r4.parse_canonical_4ap8(inst, clusters)
    assert core.cluster_cost(inst, parsed.filler) == 8 * len(parsed.filler)
    assert core.suppressed_columns(inst, parsed.filler) == 8


def test_vc_to_solution_rejects_non_cover():
    inst = k4_instance()
    with pytest.raises(NotACover):
        r4.vc_to_solution_4ap8(inst, graphs.VertexCover(frozenset({0})))


def test_locality_of_canonical_solutions():
    for name in graphs.BUILTIN_GRAPHS:
        g = graphs.builtin(name)
        inst = r4.build_4ap8_instance(g)
        cover = graphs.exact_vertex_cover(g)
        clusters = r4.vc_to_solution_4ap8(inst, cover)
        report = r4.verify_locality(inst, clusters)
        assert report.ok, (name, report.violations)


def test_locality_of_random_solutions():
    g = graphs.k33()
    inst = r4.build_4ap8_instance(g)
    rng = random.Random(3)
    for _ in range(50):
        s = solver.random_feasible_clustering(inst, rng)
        assert r4.verify_locality(inst, s).ok


def test_canonicalize_is_idempotent_on_canonical_input():
    g = graphs.q3()
    inst = r4.build_4ap8_instance(g)
    cover = graphs.exact_vertex_cover(g)
    clusters = r4.vc_to_solution_4ap8(inst, cover)
    again = r4.canonicalize_4ap8(inst, clusters)
    assert core.clustering_cost(inst, again) == core.clustering_cost(inst, clusters)
    assert r4.is_canonical_4ap8(inst, again)


def test_canonicalize_random_solutions_spot_check():
    g = graphs.k4()
    inst = r4.build_4ap8_instance(g)
    rng = random.Random(11)
    for _ in range(25):
        s = solver.random_feasible_clustering(inst, rng)
        out = r4.canonicalize_4ap8(inst, s)
        assert core.clustering_cost(inst, out) <= core.clustering_cost(inst, s)
        assert r4.is_canonical_4ap8(inst, out)
        p = len(r4.solution_to_vc_4ap8(inst, out))
        assert core.clustering_cost(inst, out) == r4.canonical_cost_formula(
            g.n, g.m, p
        )


def test_is_canonical_rejects_arbitrary_feasible_clusterings():
    inst = k4_instance()
    greedy = solver.greedy_kap(inst)
    assert not r4.is_canonical_4ap8(inst, greedy.clustering)
