"""Exhaustive small-n suites cross-checking constructions against the oracle."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterator

import networkx as nx

from dchain.chains import ValidationReport, Coloring, balanced_condition, generate_double_chain
from dchain.geometry import Point, edges_noncrossing, segments_properly_cross
from dchain.hedgehog import cover_with_k_hedgehogs, hedgehog_violations, runs_of
from dchain.nhap import InvariantError, PathEmbedding, PreconditionError, embed_nhap, validate_path
from dchain.oracle import SearchBudget, brute_force_embed, brute_force_nhap, enumerate_equitable_colorings
from dchain.trees import (
    ColoredGraph,
    Embedding,
    as_caterpillar,
    embed_caterpillar,
    embed_star_forest,
    is_forest_of_caterpillars,
    star_census,
    stars_to_caterpillar,
    validate_embedding,
)

SUITES = ("nhap", "caterpillar", "stars", "hedgehog")
FAULTS = ("validator", "output")


@dataclass(frozen=True)
class SweepConfig:
    suite: str
    max_n: int = 10
    max_side: int = 5
    oracle: bool = True
    node_limit: int = 2_000_000
    fault: str | None = None
    jobs: int = 1
    seed: int = 0  # recorded only; every suite is exhaustive


# ---------------------------------------------------------------------------
# case enumeration


def point_colorings(n1: int, n2: int, blacks: int) -> Iterator[Coloring]:
    for bs in itertools.combinations(range(n1 + n2), blacks):
        s = "".join("B" if i in bs else "W" for i in range(n1 + n2))
        yield Coloring(s[:n1], s[n1:])


def balanced_sizes(n: int) -> list[tuple[int, int]]:
    return sorted({((n + 1) // 2, n // 2), (n // 2, (n + 1) // 2)})


def nhap_cases(max_side: int = 5, max_n: int = 10, min_side: int = 2) -> Iterator[tuple[int, int, str, str]]:
    for n1 in range(min_side, max_side + 1):
        for n2 in range(min_side, max_side + 1):
            if n1 + n2 > max_n or not balanced_condition(n1, n2):
                continue
            for s in enumerate_equitable_colorings(n1 + n2):
                yield n1, n2, s[:n1], s[n1:]


def caterpillars(max_n: int = 8) -> Iterator[ColoredGraph]:
    """Equitable, properly colored caterpillars with a short enough central
    path, one per isomorphism class and coloring."""
    for n in range(2, max_n + 1):
        trees = nx.nonisomorphic_trees(n) if n > 2 else [nx.path_graph(2)]
        for t in trees:
            side = nx.bipartite.color(t)
            seen: set[str] = set()
            for flip in (0, 1):
                colors = "".join("BW"[side[v] ^ flip] for v in range(n))
                g = ColoredGraph(n, tuple(t.edges()), colors)
                if colors in seen or not g.is_equitable or not is_forest_of_caterpillars(g):
                    continue
                seen.add(colors)
                if len(as_caterpillar(g).central_path) <= n // 2:
                    yield g


def _partitions(n: int, most: int | None = None) -> Iterator[list[int]]:
    most = n if most is None else most
    if n == 0:
        yield []
        return
    for k in range(min(n, most), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def star_forests(max_n: int = 8, min_n: int = 2) -> Iterator[ColoredGraph]:
    """Properly, equitably colored star forests up to isomorphism."""
    for n in range(min_n, max_n + 1):
        for sizes in _partitions(n):
            options = [("B",) if s == 2 else ("B", "W") for s in sizes]
            seen = set()
            for centers in itertools.product(*options):
                sig = tuple(sorted(zip(sizes, centers)))
                if sig in seen:
                    continue
                seen.add(sig)
                edges, colors, base = [], [], 0
                for s, c in zip(sizes, centers):
                    colors.append(c)
                    colors.extend(("W" if c == "B" else "B") * (s - 1))
                    edges.extend((base, base + i) for i in range(1, s))
                    base += s
                g = ColoredGraph(n, tuple(edges), "".join(colors))
                if g.is_equitable:
                    yield g


def hedgehog_cases(max_m: int = 10) -> Iterator[tuple[str, str, int]]:
    """(chain colors, major color, k) over every coloring and admissible k."""
    for m in range(1, max_m + 1):
        for word in itertools.product("BW", repeat=m):
            s = "".join(word)
            for major in "BW":
                flags = [c == major for c in s]
                delta = 2 * sum(flags) - m
                if delta < 0:
                    continue
                r = len(runs_of(flags))
                for k in range(max(1, r, delta), m + 1):
                    yield s, major, k


# ---------------------------------------------------------------------------
# checks


def _broken_noncrossing(pts: list[Point]) -> bool:
    # fault injection: counts shared endpoints as crossings
    segs = list(zip(pts, pts[1:]))
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            if set(segs[i]) & set(segs[j]) or segments_properly_cross(segs[i], segs[j]):
                return False
    return True


def _check_path(dc, col, path: PathEmbedding, fault: str | None) -> ValidationReport:
    if fault == "validator":
        rep = validate_path(dc, col, path)
        if rep and len(path.order) > 2 and not _broken_noncrossing([dc.point(*r) for r in path.order]):
            return ValidationReport(False, "edges cross")
        return rep
    return validate_path(dc, col, path)


def _corrupt(order: tuple) -> tuple:
    return (order[1], order[0]) + order[2:] if len(order) > 2 else order


def _refs(dc) -> list[tuple[int, int]]:
    return [(0, i) for i in range(len(dc.c1))] + [(1, j) for j in range(len(dc.c2))]


def run_nhap_case(n1: int, n2: int, c1: str, c2: str, cfg: SweepConfig) -> dict:
    dc = generate_double_chain(n1, n2)
    col = Coloring(c1, c2)
    out: dict = {"key": f"nhap/{n1},{n2}/{c1}|{c2}", "ok": True}
    try:
        path = embed_nhap(dc, col)
    except (PreconditionError, InvariantError) as exc:
        return out | {"ok": False, "reason": f"{type(exc).__name__}: {exc}"}
    if cfg.fault == "output":
        path = PathEmbedding(_corrupt(path.order))
    rep = _check_path(dc, col, path, cfg.fault)
    if not rep:
        out |= {"ok": False, "reason": rep.violation, "path": [list(r) for r in path.order]}
    if cfg.oracle:
        refs = _refs(dc)
        res = brute_force_nhap([dc.point(*r) for r in refs], c1 + c2, SearchBudget(cfg.node_limit, 3600))
        out["oracle"] = res.status
        if res.status == "none":
            out |= {"ok": False, "reason": "oracle found no path"}
        elif res.status == "found" and not validate_path(dc, col, [refs[i] for i in res.witness]):
            out |= {"ok": False, "reason": "oracle witness fails validation"}
    return out


def _check_embedding(dc, col, g, emb: Embedding, fault: str | None) -> ValidationReport:
    if fault == "output" and g.n > 1:
        m = list(emb.map)
        m[0], m[1] = m[1], m[0]
        emb = Embedding(tuple(m))
    rep = validate_embedding(dc, col, g, emb)
    if fault == "validator" and rep and g.n > 2 and len(g.edges) > 1:
        return ValidationReport(False, "edges cross")
    return rep


def run_graph_case(kind: str, g: ColoredGraph, n1: int, n2: int, c1: str, c2: str, cfg: SweepConfig) -> dict:
    dc = generate_double_chain(n1, n2)
    col = Coloring(c1, c2)
    out: dict = {"key": f"{kind}/{g.colors}/{list(map(list, g.edges))}/{c1}|{c2}", "ok": True}
    try:
        if kind == "stars":
            census = star_census(g)
            if census.vertex_total() != g.n:
                return out | {"ok": False, "reason": "census identity fails"}
            cat = stars_to_caterpillar(g, census)
            if len(cat.central_path) > max(1, g.n // 2):
                return out | {"ok": False, "reason": "central path too long"}
            emb = embed_star_forest(dc, g, col)
        else:
            emb = embed_caterpillar(dc, g, col)
    except (PreconditionError, InvariantError) as exc:
        return out | {"ok": False, "reason": f"{type(exc).__name__}: {exc}"}
    rep = _check_embedding(dc, col, g, emb, cfg.fault)
    if not rep:
        out |= {"ok": False, "reason": rep.violation}
    if cfg.oracle:
        refs = _refs(dc)
        res = brute_force_embed(g.n, g.edges, g.colors, [dc.point(*r) for r in refs], c1 + c2,
                                SearchBudget(cfg.node_limit, 3600))
        out["oracle"] = res.status
        if res.status == "none":
            out |= {"ok": False, "reason": "oracle found no embedding"}
        elif res.status == "found":
            wit = Embedding(tuple(refs[i] for i in res.witness))
            if not validate_embedding(dc, col, g, wit):
                out |= {"ok": False, "reason": "oracle witness fails validation"}
    return out


def run_hedgehog_case(s: str, major: str, k: int, cfg: SweepConfig) -> dict:
    flags = [c == major for c in s]
    out: dict = {"key": f"hedgehog/{s}/{major}/{k}", "ok": True}
    try:
        hs = cover_with_k_hedgehogs(flags, k)
    except Exception as exc:  # report, never abort the sweep
        return out | {"ok": False, "reason": f"{type(exc).__name__}: {exc}"}
    if cfg.fault == "output":
        hs = hs[:-1]
    errors = hedgehog_violations(flags, hs)
    if len(hs) != k:
        errors.append(f"{len(hs)} hedgehogs instead of {k}")
    pts = list(generate_double_chain(len(s), 1).c1.points)
    edges = [(pts[u], pts[v]) for h in hs for u, v in zip(h.path, h.path[1:])]
    if not edges_noncrossing(edges):
        errors.append("hedgehog edges cross")
    elif cfg.fault == "validator" and any(not _broken_noncrossing([pts[p] for p in h.path]) for h in hs if len(h.path) > 2):
        errors.append("hedgehog edges cross")
    if errors:
        out |= {"ok": False, "reason": "; ".join(errors)}
    return out


def _run_one(item: tuple) -> dict:
    suite, payload, cfg = item
    if suite == "nhap":
        return run_nhap_case(*payload, cfg)
    if suite == "hedgehog":
        return run_hedgehog_case(*payload, cfg)
    return run_graph_case(suite, *payload, cfg)


def _graph_items(suite: str, cfg: SweepConfig) -> Iterator[tuple]:
    graphs = caterpillars(cfg.max_n) if suite == "caterpillar" else star_forests(cfg.max_n)
    for g in graphs:
        for n1, n2 in balanced_sizes(g.n):
            for col in point_colorings(n1, n2, g.colors.count("B")):
                yield suite, (g, n1, n2, col.c1, col.c2), cfg


def sweep_items(cfg: SweepConfig) -> Iterator[tuple]:
    if cfg.suite == "nhap":
        return ((cfg.suite, c, cfg) for c in nhap_cases(cfg.max_side, cfg.max_n))
    if cfg.suite == "hedgehog":
        return ((cfg.suite, c, cfg) for c in hedgehog_cases(cfg.max_n))
    if cfg.suite in ("caterpillar", "stars"):
        return _graph_items(cfg.suite, cfg)
    raise ValueError(f"unknown suite {cfg.suite!r}")


def run_sweep(cfg: SweepConfig, max_dumps: int = 20) -> dict:
    """Run a suite; the report depends only on the set of case results."""
    if cfg.fault is not None and cfg.fault not in FAULTS:
        raise ValueError(f"unknown fault {cfg.fault!r}")
    items = sweep_items(cfg)
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            results = list(pool.map(_run_one, items, chunksize=64))
    else:
        results = [_run_one(it) for it in items]
    results.sort(key=lambda r: r["key"])
    bad = [r for r in results if not r["ok"]]
    oracle: dict[str, int] = {}
    for r in results:
        if "oracle" in r:
            oracle[r["oracle"]] = oracle.get(r["oracle"], 0) + 1
    return {
        "suite": cfg.suite,
        "config": asdict(cfg),
        "cases": len(results),
        "passed": len(results) - len(bad),
        "mismatches": len(bad),
        "oracle": dict(sorted(oracle.items())),
        "counterexamples": bad[:max_dumps],
    }
