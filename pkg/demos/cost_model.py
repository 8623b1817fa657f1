"""Tour of the suppression cost model on a toy table.

Rows must be grouped into clusters of size >= k; every column where a
cluster disagrees is suppressed in all of the cluster's rows, and the
cluster pays (size x suppressed columns).
"""

from anonhard import core, solver


def show(inst, clusters, label):
    print(f"\n{label}:")
    for c in clusters:
        cols = core.suppressed_columns(inst, c)
        print(f"  rows {sorted(c)}: {cols} suppressed columns, cost {core.cluster_cost(inst, c)}")
    print(f"  total cost {core.clustering_cost(inst, clusters)}")


def main():
    bitstrings = ["0000", "0001", "0011", "1100", "1101", "1111"]
    rows = tuple(tuple(core.bit(int(ch)) for ch in s) for s in bitstrings)
    inst = core.Instance(rows=rows, k=2)
    print("table (k = 2):")
    for i, s in enumerate(bitstrings):
        print(f"  row {i}: {s}")

    show(inst, [(0, 1, 2), (3, 4, 5)], "split by leading bits")
    show(inst, [(0, 5), (1, 4), (2, 3)], "a deliberately bad pairing")

    exact = solver.exact_kap(inst)
    show(inst, exact.clustering, f"optimal (searched {exact.nodes_explored} nodes)")

    greedy = solver.greedy_kap(inst)
    show(inst, greedy.clustering, "greedy baseline")


if __name__ == "__main__":
    main()
