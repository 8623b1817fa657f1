"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

from . import core, graphs, io, reduction3abp, reduction4ap8, solver
from .errors import AnonHardError


@dataclass
class VerificationReport:
    checks: List[tuple] = field(default_factory=list)  # (name, expected, observed, ok)
    fingerprint: str = ""

    def add(self, name: str, expected, observed) -> None:
        self.checks.append((name, expected, observed, expected == observed))

    def add_flag(self, name: str, ok: bool, detail="") -> None:
        self.checks.append((name, "pass", detail if detail else ("pass" if ok else "fail"), ok))

    @property
    def ok(self) -> bool:
        return all(c[3] for c in self.checks)

    def to_text(self) -> str:
        lines = []
        if self.fingerprint:
            lines.append(f"instance fingerprint: {self.fingerprint}")
        for name, expected, observed, ok in self.checks:
            status = "PASS" if ok else "FAIL"
            lines.append(f"[{status}] {name}: expected {expected}, observed {observed}")
        passed = sum(1 for c in self.checks if c[3])
        lines.append(f"{passed}/{len(self.checks)} checks passed")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        lines = ["check,expected,observed,pass"]
        for name, expected, observed, ok in self.checks:
            lines.append(f"{name},{expected},{observed},{int(ok)}")
        return "\n".join(lines) + "\n"


def _fingerprint(inst: core.Instance) -> str:
    return hashlib.sha256(io.rows_to_csv(inst.rows).encode()).hexdigest()


def _load_graph(args) -> graphs.CubicGraph:
    if getattr(args, "builtin", None):
        return graphs.builtin(args.builtin)
    if getattr(args, "graph", None):
        return graphs.parse_graph(Path(args.graph).read_text())
    raise SystemExit(2)


def _build(reduction: str, g: graphs.CubicGraph) -> core.Instance:
    if reduction == "3abp":
        return reduction3abp.build_3abp_instance(g)
    return reduction4ap8.build_4ap8_instance(g)


def _emit_report(report: VerificationReport, out: Optional[str]) -> int:
    if out:
        outdir = Path(out)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "report.txt").write_text(report.to_text())
        (outdir / "report.csv").write_text(report.to_csv())
    sys.stdout.write(report.to_text())
    return 0 if report.ok else 1


def _parse_cover(text: str) -> set:
    return {int(tok) - 1 for tok in text.replace(",", " ").split()}


def cmd_gen_graph(args) -> int:
    g = graphs.builtin(args.builtin)
    text = graphs.write_graph(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_build(args) -> int:
    g = _load_graph(args)
    inst = _build(args.reduction, g)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / "rows.csv").write_text(io.rows_to_csv(inst.rows))
    (outdir / "provenance.json").write_text(io.provenance_to_json(inst))
    (outdir / "layout.json").write_text(io.layout_to_json(inst))
    print(f"wrote {inst.n_rows} rows of width {inst.width} to {outdir}")
    return 0


def cmd_solve_vc(args) -> int:
    g = _load_graph(args)
    cover = graphs.greedy_vertex_cover(g) if args.greedy else graphs.exact_vertex_cover(g)
    vs = sorted(v + 1 for v in cover.vertices)
    print(json.dumps({"size": len(cover), "vertices": vs, "exact": not args.greedy}))
    return 0


def cmd_vc_to_solution(args) -> int:
    g = _load_graph(args)
    inst = _build(args.reduction, g)
    if args.cover:
        cover = graphs.check_cover(g, _parse_cover(args.cover))
    else:
        cover = graphs.exact_vertex_cover(g)
    if args.reduction == "3abp":
        clusters = reduction3abp.vc_to_solution_3abp(inst, cover)
    else:
        clusters = reduction4ap8.vc_to_solution_4ap8(inst, cover)
    text = io.clustering_to_json(clusters)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    print(f"cost {core.clustering_cost(inst, clusters)}", file=sys.stderr)
    return 0


def cmd_solution_to_vc(args) -> int:
    g = _load_graph(args)
    inst = _build(args.reduction, g)
    clusters = io.parse_clustering_json(Path(args.clustering).read_text())
    if args.reduction == "3abp":
        cover = reduction3abp.solution_to_vc_3abp(inst, clusters)
    else:
        cover = reduction4ap8.solution_to_vc_4ap8(inst, clusters)
    print(json.dumps({"size": len(cover), "vertices": sorted(v + 1 for v in cover.vertices)}))
    return 0


def cmd_canonicalize(args) -> int:
    g = _load_graph(args)
    inst = _build(args.reduction, g)
    canonicalize = (
        reduction3abp.canonicalize_3abp
        if args.reduction == "3abp"
        else reduction4ap8.canonicalize_4ap8
    )
    is_canonical = (
        reduction3abp.is_canonical_3abp
        if args.reduction == "3abp"
        else reduction4ap8.is_canonical_4ap8
    )
    if args.clustering:
        clusters = io.parse_clustering_json(Path(args.clustering).read_text())
        result = canonicalize(inst, clusters)
        text = io.clustering_to_json(result)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        print(
            f"cost {core.clustering_cost(inst, clusters)} -> "
            f"{core.clustering_cost(inst, result)}",
            file=sys.stderr,
        )
        return 0
    # Randomized soundness trials.
    report = VerificationReport(fingerprint=_fingerprint(inst))
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.trials):
        s = solver.random_feasible_clustering(inst, rng)
        result = canonicalize(inst, s)
        if core.clustering_cost(inst, result) > core.clustering_cost(inst, s):
            failures += 1
        elif not is_canonical(inst, result):
            failures += 1
    report.add(f"canonicalize soundness over {args.trials} trials (failures)", 0, failures)
    return _emit_report(report, args.out_report)


def cmd_solve(args) -> int:
    rows = io.parse_rows_csv(Path(args.rows).read_text())
    inst = core.Instance(rows=tuple(rows), k=args.k)
    result = solver.greedy_kap(inst) if args.greedy else solver.exact_kap(inst, limit=args.limit)
    print(f"cost {result.cost} optimal={result.optimal}")
    sys.stdout.write(io.clustering_to_json(result.clustering))
    return 0


def _verify_distances(args) -> int:
    g = _load_graph(args)
    inst = reduction3abp.build_3abp_instance(g)
    report = VerificationReport(fingerprint=_fingerprint(inst))
    catalog = reduction3abp.verify_distance_catalog(inst)
    for case in sorted(reduction3abp.CATALOG_EXPECTATIONS):
        kind, value = reduction3abp.CATALOG_EXPECTATIONS[case]
        bad = sum(1 for v in catalog.violations if v[0] == case)
        label = "=" if kind == "eq" else ">="
        report.add(
            f"case {case} ({label}{value}), {catalog.counts[case]} pairs: violations",
            0,
            bad,
        )
    report.add("identical jolly copies: violations", 0, sum(1 for v in catalog.violations if v[0] == 0))
    return _emit_report(report, args.out)


def _verify_locality(args) -> int:
    g = _load_graph(args)
    inst = reduction4ap8.build_4ap8_instance(g)
    report = VerificationReport(fingerprint=_fingerprint(inst))
    rng = random.Random(args.seed)
    cover = graphs.exact_vertex_cover(g)
    canonical = reduction4ap8.vc_to_solution_4ap8(inst, cover)
    report.add(
        "canonical solution locality violations",
        0,
        len(reduction4ap8.verify_locality(inst, canonical).violations),
    )
    failures = 0
    for _ in range(args.trials):
        s = solver.random_feasible_clustering(inst, rng)
        failures += len(reduction4ap8.verify_locality(inst, s).violations)
    report.add(f"random-solution locality violations over {args.trials} trials", 0, failures)
    return _emit_report(report, args.out)


def _verify_canonical_costs(args) -> int:
    g = _load_graph(args)
    inst = _build(args.reduction, g)
    report = VerificationReport(fingerprint=_fingerprint(inst))
    if args.reduction == "3abp":
        gi = reduction3abp.GadgetIndex(inst)
        cover = graphs.exact_vertex_cover(g)
        clusters = reduction3abp.vc_to_solution_3abp(inst, cover)
        type_a = reduction3abp.build_type_a(inst, 0, index=gi)
        report.add("type-a gadget cost", 81, sum(core.cluster_cost(inst, c) for c in type_a))
        parsed = reduction3abp.parse_canonical_3abp(inst, clusters)
        for v, t in sorted(parsed.gadget_type.items()):
            if t == "b":
                rows_v = [
                    i
                    for i, p in enumerate(inst.provenance)
                    if not isinstance(p, reduction3abp.EdgeGadgetProv) and p.v == v
                ]
                total = sum(
                    reduction3abp.virtual_cost(inst, clusters, i) for i in rows_v
                )
                report.add(f"type-b gadget {v + 1} row cost", 99, int(total))
                break
        e0 = min(gi.eg)
        vc = reduction3abp.virtual_cost(inst, clusters, gi.eg[e0])
        report.add("edge-gadget virtual cost", 12, int(vc))
    else:
        ri = reduction4ap8.RowIndex(inst)
        red = reduction4ap8.build_red(inst, 0, index=ri)
        report.add("red cost", 15, sum(core.cluster_cost(inst, c) for c in red))
        black = reduction4ap8.build_black(inst, 0, index=ri)
        report.add("black cost", 36, sum(core.cluster_cost(inst, c) for c in black))
        cover = graphs.exact_vertex_cover(g)
        clusters = reduction4ap8.vc_to_solution_4ap8(inst, cover)
        parsed = reduction4ap8.parse_canonical_4ap8(inst, clusters)
        report.add(
            "filler cost is 8 per member",
            8 * len(parsed.filler),
            core.cluster_cost(inst, parsed.filler),
        )
    return _emit_report(report, args.out)


def _verify_roundtrip(args, name: str = "roundtrip") -> int:
    g = _load_graph(args)
    inst = _build(args.reduction, g)
    report = VerificationReport(fingerprint=_fingerprint(inst))
    cover = graphs.exact_vertex_cover(g)
    p = len(cover)
    if args.reduction == "3abp":
        clusters = reduction3abp.vc_to_solution_3abp(inst, cover)
        expected = reduction3abp.canonical_cost_formula(g.n, g.m, p)
        back = reduction3abp.solution_to_vc_3abp(inst, clusters)
    else:
        clusters = reduction4ap8.vc_to_solution_4ap8(inst, cover)
        expected = reduction4ap8.canonical_cost_formula(g.n, g.m, p)
        back = reduction4ap8.solution_to_vc_4ap8(inst, clusters)
    report.add("cover size", p, len(back))
    report.add("canonical-solution cost", expected, core.clustering_cost(inst, clusters))
    report.add(
        "recovered cover equals input",
        sorted(v + 1 for v in cover.vertices),
        sorted(v + 1 for v in back.vertices),
    )
    report.add_flag("clustering feasible", core.is_feasible(inst, clusters))
    return _emit_report(report, args.out)


def _verify_theorem(args) -> int:
    # Full chain: exact cover -> canonical solution -> cost formula ->
    # reverse extraction -> cover equality.
    return _verify_roundtrip(args, name="theorem")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="anonhard")
    parser.add_argument(
        "--jobs",
        type=int,
        default=int(os.environ.get("ANONHARD_JOBS", "1")),
        help="worker cap (operations currently run sequentially)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_args(p):
        p.add_argument("--graph", help="DIMACS-like graph file")
        p.add_argument("--builtin", choices=sorted(graphs.BUILTIN_GRAPHS))

    p = sub.add_parser("gen-graph", help="write a built-in cubic graph")
    p.add_argument("--builtin", required=True, choices=sorted(graphs.BUILTIN_GRAPHS))
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen_graph)

    p = sub.add_parser("build", help="build a reduction instance")
    add_graph_args(p)
    p.add_argument("--reduction", required=True, choices=("3abp", "4ap8"))
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("solve-vc", help="minimum (or greedy) vertex cover")
    add_graph_args(p)
    p.add_argument("--greedy", action="store_true")
    p.set_defaults(func=cmd_solve_vc)

    p = sub.add_parser("vc-to-solution", help="canonical clustering from a cover")
    add_graph_args(p)
    p.add_argument("--reduction", required=True, choices=("3abp", "4ap8"))
    p.add_argument("--cover", help="comma-separated 1-based vertices; default: exact cover")
    p.add_argument("--out")
    p.set_defaults(func=cmd_vc_to_solution)

    p = sub.add_parser("solution-to-vc", help="extract the cover from a canonical clustering")
    add_graph_args(p)
    p.add_argument("--reduction", required=True, choices=("3abp", "4ap8"))
    p.add_argument("--clustering", required=True)
    p.set_defaults(func=cmd_solution_to_vc)

    p = sub.add_parser("canonicalize", help="canonicalize a clustering or run random trials")
    add_graph_args(p)
    p.add_argument("--reduction", required=True, choices=("3abp", "4ap8"))
    p.add_argument("--clustering", help="clustering JSON to canonicalize")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--out", help="output clustering file (with --clustering)")
    p.add_argument("--out-report", help="report directory (trial mode)")
    p.set_defaults(func=cmd_canonicalize)

    p = sub.add_parser("solve", help="solve a k-anonymity table from rows.csv")
    p.add_argument("--rows", required=True)
    p.add_argument("--k", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exact", action="store_true", default=True)
    group.add_argument("--greedy", action="store_true")
    p.add_argument("--limit", type=int, default=12)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="verification reports")
    vsub = p.add_subparsers(dest="what", required=True)
    for what, func, needs_reduction in (
        ("distances", _verify_distances, False),
        ("locality", _verify_locality, False),
        ("canonical-costs", _verify_canonical_costs, True),
        ("roundtrip", _verify_roundtrip, True),
        ("theorem", _verify_theorem, True),
    ):
        vp = vsub.add_parser(what)
        add_graph_args(vp)
        if needs_reduction:
            vp.add_argument("--reduction", required=True, choices=("3abp", "4ap8"))
        if what == "locality":
            vp.add_argument("--seed", type=int, default=0)
            vp.add_argument("--trials", type=int, default=100)
        vp.add_argument("--out", help="report directory")
        vp.set_defaults(func=func)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "builtin", None) is None and getattr(args, "graph", None) is None:
        if args.command not in ("solve",):
            parser.error("one of --graph or --builtin is required")
    try:
        return args.func(args)
    except AnonHardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
