"""Canonicalization: any feasible clustering can be rewritten, without
raising its cost, into the canonical shape from which a vertex cover can
be read off directly.

Run a few random feasible clusterings through both canonicalizers and
watch the cost drop onto the closed-form lattice.
"""

import random

from anonhard import core, graphs, solver
from anonhard import reduction3abp as r3
from anonhard import reduction4ap8 as r4


def demo(label, inst, g, canonicalize, solution_to_vc, formula, rng):
    print(f"\n{label}:")
    for trial in range(5):
        s = solver.random_feasible_clustering(inst, rng)
        out = canonicalize(inst, s)
        before = core.clustering_cost(inst, s)
        after = core.clustering_cost(inst, out)
        p = len(solution_to_vc(inst, out))
        print(f"  trial {trial}: cost {before} -> {after} "
              f"= formula(p={p}) = {formula(g.n, g.m, p)}")
        assert after <= before and after == formula(g.n, g.m, p)


def main():
    rng = random.Random(2)
    g = graphs.k33()
    demo(
        "binary k=3 construction on K3,3",
        r3.build_3abp_instance(g), g,
        r3.canonicalize_3abp, r3.solution_to_vc_3abp, r3.canonical_cost_formula,
        rng,
    )
    demo(
        "width-8 k=4 construction on K3,3",
        r4.build_4ap8_instance(g), g,
        r4.canonicalize_4ap8, r4.solution_to_vc_4ap8, r4.canonical_cost_formula,
        rng,
    )


if __name__ == "__main__":
    main()
