"""JSON forms of instances, colorings, graphs, paths and embeddings."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from dchain.chains import CHAIN_IDS, Coloring, DoubleChain
from dchain.nhap import PathEmbedding
from dchain.trees import ColoredGraph, Embedding


@dataclass(frozen=True)
class Instance:
    """A double-chain together with an optional point coloring."""

    dc: DoubleChain
    coloring: Coloring | None = None


def _loc(ref: tuple[int, int]) -> list:
    return [CHAIN_IDS[ref[0]], int(ref[1])]


def _parse_loc(item: Any) -> tuple[int, int]:
    cid, pos = item
    if cid not in CHAIN_IDS:
        raise ValueError(f"unknown chain id {cid!r}")
    return CHAIN_IDS.index(cid), int(pos)


def double_chain_to_dict(dc: DoubleChain) -> dict:
    return {"c1": [[p.x, p.y] for p in dc.c1.points], "c2": [[p.x, p.y] for p in dc.c2.points]}


def double_chain_from_dict(d: dict) -> DoubleChain:
    return DoubleChain.from_points(d["c1"], d["c2"])


def coloring_to_dict(col: Coloring) -> dict:
    return {"c1": col.c1, "c2": col.c2}


def coloring_from_dict(d: dict) -> Coloring:
    return Coloring(str(d["c1"]), str(d["c2"]))


def instance_to_dict(inst: Instance) -> dict:
    out = double_chain_to_dict(inst.dc)
    if inst.coloring is not None:
        out["coloring"] = coloring_to_dict(inst.coloring)
    return out


def instance_from_dict(d: dict) -> Instance:
    col = coloring_from_dict(d["coloring"]) if "coloring" in d else None
    return Instance(double_chain_from_dict(d), col)


def graph_to_dict(g: ColoredGraph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges], "colors": g.colors}


def graph_from_dict(d: dict) -> ColoredGraph:
    return ColoredGraph(int(d["n"]), tuple((int(u), int(v)) for u, v in d["edges"]), str(d["colors"]))


def path_to_dict(p: PathEmbedding) -> dict:
    return {"order": [_loc(r) for r in p.order]}


def path_from_dict(d: dict) -> PathEmbedding:
    return PathEmbedding(tuple(_parse_loc(x) for x in d["order"]))


def embedding_to_dict(e: Embedding) -> dict:
    return {"map": [_loc(r) for r in e.map]}


def embedding_from_dict(d: dict) -> Embedding:
    return Embedding(tuple(_parse_loc(x) for x in d["map"]))


def dumps(d: Any) -> str:
    return json.dumps(d, separators=(",", ":")) + "\n"
