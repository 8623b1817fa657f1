"""The binary-alphabet k=3 construction, end to end on K4.

Each graph vertex becomes a 21-row gadget (9 core rows plus 3 sets of 4
identical "jolly" rows); each graph edge becomes one extra row docked
at both endpoint gadgets.  A vertex cover of size p corresponds to a
clustering of cost exactly 99p + 81(n-p) + 12m.
"""

from collections import Counter

from anonhard import core, graphs, reduction3abp as r3


def main():
    g = graphs.k4()
    inst = r3.build_3abp_instance(g)
    print(f"K4 -> {inst.n_rows} binary rows of width {inst.width}, k = {inst.k}")

    weights = Counter(inst.masks[i].bit_count() for i in range(inst.n_rows))
    print(f"row weights (ones per row): {dict(sorted(weights.items()))}")

    report = r3.verify_distance_catalog(inst)
    print(f"pairwise distance catalog: {'OK' if report.ok else 'VIOLATED'}")
    for case in sorted(report.counts):
        print(f"  case {case:2d}: {report.counts[case]} pairs")

    cover = graphs.exact_vertex_cover(g)
    p = len(cover)
    clusters = r3.vc_to_solution_3abp(inst, cover)
    cost = core.clustering_cost(inst, clusters)
    print(f"\ncover of size {p} -> canonical clustering of {len(clusters)} clusters")
    print(f"cost {cost} (formula: 99*{p} + 81*{g.n - p} + 12*{g.m} = "
          f"{r3.canonical_cost_formula(g.n, g.m, p)})")

    back = r3.solution_to_vc_3abp(inst, clusters)
    print(f"extracted back: {sorted(v + 1 for v in back.vertices)} "
          f"(matches: {back.vertices == cover.vertices})")


if __name__ == "__main__":
    main()
