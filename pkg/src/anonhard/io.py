"""File formats: row CSV, clustering JSON, provenance and layout JSON.

Symbol tokens: ``0``/``1`` for binary, ``a:i`` / ``ar:i:h`` / ``t:i:j``
/ ``u:i`` for the width-8 alphabet.  Vertex indices are 1-based in
files and 0-based in memory, matching the graph-file convention.
"""

from __future__ import annotations

import json
from typing import List, Sequence

from .core import (
    Instance,
    Row,
    Symbol,
    bit,
    edge_sym,
    free_sym,
    vertex_row_sym,
    vertex_sym,
)
from .reduction3abp import CoreEdgeProv, EdgeGadgetProv, JollyProv
from .reduction4ap8 import EdgeRowProv, FreeRowProv, VertexRowProv


def symbol_token(s: Symbol) -> str:
    family = s[0]
    if family == "b":
        return str(s[1])
    if family == "a":
        return f"a:{s[1] + 1}"
    if family == "ar":
        return f"ar:{s[1] + 1}:{s[2]}"
    if family == "t":
        return f"t:{s[1] + 1}:{s[2] + 1}"
    if family == "u":
        return f"u:{s[1]}"
    raise ValueError(f"unknown symbol {s!r}")


def parse_token(tok: str) -> Symbol:
    if tok in ("0", "1"):
        return bit(int(tok))
    parts = tok.split(":")
    if parts[0] == "a":
        return vertex_sym(int(parts[1]) - 1)
    if parts[0] == "ar":
        return vertex_row_sym(int(parts[1]) - 1, int(parts[2]))
    if parts[0] == "t":
        return edge_sym(int(parts[1]) - 1, int(parts[2]) - 1)
    if parts[0] == "u":
        return free_sym(int(parts[1]))
    raise ValueError(f"unknown token {tok!r}")


def rows_to_csv(rows: Sequence[Row]) -> str:
    return "\n".join(",".join(symbol_token(s) for s in r) for r in rows) + "\n"


def parse_rows_csv(text: str) -> List[Row]:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            rows.append(tuple(parse_token(tok) for tok in line.split(",")))
    return rows


def clustering_to_json(clusters: Sequence) -> str:
    return json.dumps([sorted(c) for c in clusters]) + "\n"


def parse_clustering_json(text: str) -> List[tuple]:
    return [tuple(c) for c in json.loads(text)]


def _prov_to_obj(p) -> dict:
    if isinstance(p, CoreEdgeProv):
        return {"kind": "core_edge", "vertex": p.v + 1, "x": p.x, "y": p.y}
    if isinstance(p, JollyProv):
        return {"kind": "jolly", "vertex": p.v + 1, "dock": p.dock, "copy": p.copy}
    if isinstance(p, EdgeGadgetProv):
        return {"kind": "edge_gadget", "u": p.u + 1, "v": p.v + 1, "x": p.x, "y": p.y}
    if isinstance(p, VertexRowProv):
        return {"kind": "vertex_row", "vertex": p.v + 1, "h": p.h}
    if isinstance(p, EdgeRowProv):
        return {"kind": "edge_row", "u": p.u + 1, "v": p.v + 1}
    if isinstance(p, FreeRowProv):
        return {"kind": "free_row", "index": p.i}
    raise ValueError(f"unknown provenance {p!r}")


def provenance_to_json(inst: Instance) -> str:
    return json.dumps([_prov_to_obj(p) for p in inst.provenance], indent=1) + "\n"


def layout_to_json(inst: Instance) -> str:
    params = inst.params
    obj = {
        "reduction": params["reduction"],
        "n": params["n"],
        "m": params["m"],
        "k": inst.k,
        "rows": inst.n_rows,
        "width": inst.width,
    }
    if params["reduction"] == "3abp":
        n = params["n"]
        obj["blocks"] = {
            "vertex": {"offset": 0, "size_each": 21},
            "jolly": {"offset": 21 * n, "size": 6 * n},
            "edge": {"offset": 27 * n, "size": 3 * n},
        }
    else:
        obj["edge_block_of_vertex"] = {
            str(v + 1): b for v, b in sorted(params["blocks"].items())
        }
    return json.dumps(obj, indent=1) + "\n"
