import json

import pytest

from anonhard import cli, core, graphs, io
from anonhard import reduction3abp as r3
from anonhard import reduction4ap8 as r4


def test_symbol_token_roundtrip():
    symbols = [
        core.bit(0),
        core.bit(1),
        core.vertex_sym(0),
        core.vertex_sym(6),
        core.vertex_row_sym(2, 5),
        core.edge_sym(0, 3),
        core.free_sym(4),
    ]
    for s in symbols:
        assert io.parse_token(io.symbol_token(s)) == s
    # Vertex indices are 1-based on disk.
    assert io.symbol_token(core.vertex_sym(0)) == "a:1"
    assert io.symbol_token(core.edge_sym(1, 0)) == "t:1:2"
    with pytest.raises(ValueError):
        io.parse_token("zzz")


def test_rows_csv_roundtrip_both_alphabets():
    for build in (r3.build_3abp_instance, r4.build_4ap8_instance):
        inst = build(graphs.k4())
        text = io.rows_to_csv(inst.rows)
        assert tuple(io.parse_rows_csv(text)) == inst.rows


def test_clustering_json_roundtrip():
    clusters = [(3, 1, 2), (0, 4, 5)]
    text = io.clustering_to_json(clusters)
    assert io.parse_clustering_json(text) == [(1, 2, 3), (0, 4, 5)]


def test_layout_and_provenance_files():
    inst3 = r3.build_3abp_instance(graphs.k4())
    layout = json.loads(io.layout_to_json(inst3))
    assert layout["reduction"] == "3abp"
    assert layout["width"] == 120 and layout["rows"] == 90
    assert layout["blocks"]["jolly"]["offset"] == 84
    prov = json.loads(io.provenance_to_json(inst3))
    assert len(prov) == 90
    assert prov[0] == {"kind": "core_edge", "vertex": 1, "x": 1, "y": 4}

    inst4 = r4.build_4ap8_instance(graphs.k4())
    layout4 = json.loads(io.layout_to_json(inst4))
    assert layout4["reduction"] == "4ap8"
    assert set(layout4["edge_block_of_vertex"]) == {"1", "2", "3", "4"}


def test_cli_build_and_verify(tmp_path):
    out = tmp_path / "inst"
    assert cli.run(["build", "--builtin", "k4", "--reduction", "3abp", "--out", str(out)]) == 0
    rows = io.parse_rows_csv((out / "rows.csv").read_text())
    assert len(rows) == 90 and len(rows[0]) == 120
    assert (out / "provenance.json").exists()
    assert (out / "layout.json").exists()

    report_dir = tmp_path / "report"
    assert cli.run(["verify", "distances", "--builtin", "k4", "--out", str(report_dir)]) == 0
    text = (report_dir / "report.txt").read_text()
    assert "FAIL" not in text
    assert (report_dir / "report.csv").read_text().startswith("check,expected,observed,pass")


def test_cli_roundtrip_via_files(tmp_path):
    gfile = tmp_path / "g.txt"
    assert cli.run(["gen-graph", "--builtin", "k33", "--out", str(gfile)]) == 0
    clfile = tmp_path / "cl.json"
    assert cli.run(
        ["vc-to-solution", "--graph", str(gfile), "--reduction", "4ap8",
         "--out", str(clfile)]
    ) == 0
    clusters = io.parse_clustering_json(clfile.read_text())
    inst = r4.build_4ap8_instance(graphs.k33())
    assert core.is_feasible(inst, clusters)
    assert cli.run(
        ["solution-to-vc", "--graph", str(gfile), "--reduction", "4ap8",
         "--clustering", str(clfile)]
    ) == 0


def test_cli_explicit_cover_and_canonicalize(tmp_path):
    clfile = tmp_path / "cl.json"
    assert cli.run(
        ["vc-to-solution", "--builtin", "k4", "--reduction", "3abp",
         "--cover", "1,2,3", "--out", str(clfile)]
    ) == 0
    outfile = tmp_path / "canon.json"
    assert cli.run(
        ["canonicalize", "--builtin", "k4", "--reduction", "3abp",
         "--clustering", str(clfile), "--out", str(outfile)]
    ) == 0
    inst = r3.build_3abp_instance(graphs.k4())
    assert r3.is_canonical_3abp(inst, io.parse_clustering_json(outfile.read_text()))


def test_cli_canonicalize_trials_and_verify_subcommands():
    assert cli.run(
        ["canonicalize", "--builtin", "k4", "--reduction", "4ap8",
         "--seed", "1", "--trials", "10"]
    ) == 0
    for what, extra in (
        ("locality", ["--trials", "5"]),
        ("canonical-costs", ["--reduction", "3abp"]),
        ("canonical-costs", ["--reduction", "4ap8"]),
        ("roundtrip", ["--reduction", "3abp"]),
        ("theorem", ["--reduction", "4ap8"]),
    ):
        assert cli.run(["verify", what, "--builtin", "k4"] + extra) == 0


def test_cli_solve(tmp_path):
    inst = r4.build_4ap8_instance(graphs.k4())
    rows = inst.rows[:8]
    f = tmp_path / "rows.csv"
    f.write_text(io.rows_to_csv(rows))
    assert cli.run(["solve", "--rows", str(f), "--k", "4"]) == 0
    assert cli.run(["solve", "--rows", str(f), "--k", "4", "--greedy"]) == 0


def test_cli_bad_cover_exits_nonzero():
    assert cli.run(
        ["vc-to-solution", "--builtin", "k4", "--reduction", "3abp", "--cover", "1"]
    ) == 1


def test_cli_usage_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        cli.run(["build", "--builtin", "k4", "--reduction", "bogus", "--out", "/tmp/x"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.run(["solve-vc"])  # neither --graph nor --builtin
    assert exc.value.code == 2
