"""The width-8 alphabet k=4 construction on the Petersen graph.

Every row has 8 columns split into four 2-column blocks; each vertex
owns a block (adjacent vertices own different blocks).  A vertex is
either "red" (its 5 rows clustered together, cost 15) or "black" (4 + 1
rows where the singleton absorbs the vertex's 3 edge rows, cost 36);
leftover rows land in a filler cluster costing 8 per member.
"""

from anonhard import core, graphs, reduction4ap8 as r4


def main():
    g = graphs.petersen()
    inst = r4.build_4ap8_instance(g)
    print(f"Petersen -> {inst.n_rows} rows of width {inst.width}, k = {inst.k}")
    print(f"vertex blocks: { {v + 1: b for v, b in sorted(inst.params['blocks'].items())} }")

    cover = graphs.exact_vertex_cover(g)
    p = len(cover)
    clusters = r4.vc_to_solution_4ap8(inst, cover)
    parsed = r4.parse_canonical_4ap8(inst, clusters)
    reds = sorted(v + 1 for v, c in parsed.color.items() if c == "red")
    blacks = sorted(v + 1 for v, c in parsed.color.items() if c == "black")
    print(f"\ncover of size {p}: red vertices {reds}, black vertices {blacks}")
    print(f"filler cluster: {len(parsed.filler)} rows, "
          f"cost {core.cluster_cost(inst, parsed.filler)}")

    cost = core.clustering_cost(inst, clusters)
    print(f"total cost {cost} (formula: 12*{g.n - p} + 15*{p} + 8*{g.m} + 32 = "
          f"{r4.canonical_cost_formula(g.n, g.m, p)})")

    loc = r4.verify_locality(inst, clusters)
    print(f"locality check: {'OK' if loc.ok else loc.violations}")


if __name__ == "__main__":
    main()
