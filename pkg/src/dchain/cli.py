"""Command-line interface: ``dchain <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any, Sequence

from dchain import serialize as S
from dchain.bench import DEFAULT_FRACTIONS, DEFAULT_SIZES, plot, random_equitable, run_bench, write_tsv
from dchain.chains import CHAIN_IDS, Coloring, compute_stats, generate_double_chain, periodic_coloring_16
from dchain.geometry import CoordinateOverflowError
from dchain.hedgehog import InfeasibleCoverError, cover_with_k_bodies, realize_hedgehogs
from dchain.nhap import InvariantError, PreconditionError, certify_path, embed_nhap, validate_path
from dchain.oracle import SearchBudget, brute_force_embed, brute_force_nhap
from dchain.render import graph_edges, path_edges, render_svg
from dchain.sweep import FAULTS, SUITES, SweepConfig, run_sweep
from dchain.trees import embed_caterpillar, embed_star_forest, is_forest_of_caterpillars, validate_embedding

EXIT_OK, EXIT_PRECONDITION, EXIT_INVARIANT, EXIT_INCONCLUSIVE = 0, 1, 2, 3

# geometric certification is quadratic; beyond this the exact chain certifier is used
GEOMETRIC_CERTIFY_LIMIT = 5000


class CertificationError(InvariantError):
    pass


def _read_json(path: str | None) -> Any:
    if path in (None, "-"):
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _write(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _instance(args) -> S.Instance:
    inst = S.instance_from_dict(_read_json(args.instance))
    if inst.coloring is None:
        raise PreconditionError("instance has no coloring")
    return inst


def _fill_second(c1: str, n2: int) -> str:
    # colors for C2 that make the whole coloring equitable
    b, w = c1.count("B"), c1.count("W")
    out = []
    for _ in range(n2):
        c = "B" if b <= w else "W"
        out.append(c)
        b, w = b + (c == "B"), w + (c == "W")
    if abs(b - w) > 1:
        raise PreconditionError("C2 is too short to balance the C1 colors")
    return "".join(out)


# ---------------------------------------------------------------------------
# subcommands


def cmd_gen(args) -> int:
    n1, n2 = args.n1, args.n2
    if args.coloring == "explicit":
        if args.c1 is None or args.c2 is None:
            raise PreconditionError("explicit coloring needs --c1 and --c2")
        col = Coloring(args.c1, args.c2)
        if (len(col.c1), len(col.c2)) != (n1, n2):
            raise PreconditionError("explicit coloring lengths do not match --n1/--n2")
    elif args.coloring == "random-equitable":
        col = random_equitable(n1, n2, random.Random(args.seed))
    elif args.coloring == "periodic16":
        c1 = periodic_coloring_16(n1)
        col = Coloring(c1, _fill_second(c1, n2))
    else:
        col = Coloring("B" * n1, "W" * n2)
    dc = generate_double_chain(n1, n2)
    _write(S.dumps(S.instance_to_dict(S.Instance(dc, col))), args.out)
    return EXIT_OK


def _certify_path(dc, col, path) -> None:
    rep = validate_path(dc, col, path) if dc.n <= GEOMETRIC_CERTIFY_LIMIT else certify_path(dc, col, path)
    if not rep:
        raise CertificationError(f"certification failed: {rep.violation}")


def cmd_embed_path(args) -> int:
    inst = _instance(args)
    path = embed_nhap(inst.dc, inst.coloring)
    if args.certify:
        _certify_path(inst.dc, inst.coloring, path)
    if args.svg:
        _write(render_svg(inst.dc, inst.coloring, path_edges(path.order)), args.svg)
    _write(S.dumps(S.path_to_dict(path)), args.out)
    return EXIT_OK


def _cmd_embed_graph(args, embed) -> int:
    inst = _instance(args)
    g = S.graph_from_dict(_read_json(args.graph))
    emb = embed(inst.dc, g, inst.coloring)
    if args.certify:
        rep = validate_embedding(inst.dc, inst.coloring, g, emb)
        if not rep:
            raise CertificationError(f"certification failed: {rep.violation}")
    if args.svg:
        _write(render_svg(inst.dc, inst.coloring, graph_edges(emb.map, g.edges)), args.svg)
    _write(S.dumps(S.embedding_to_dict(emb)), args.out)
    return EXIT_OK


def cmd_embed_caterpillar(args) -> int:
    return _cmd_embed_graph(args, embed_caterpillar)


def cmd_embed_stars(args) -> int:
    return _cmd_embed_graph(args, embed_star_forest)


def cmd_oracle(args) -> int:
    inst = _instance(args)
    refs = [(0, i) for i in range(len(inst.dc.c1))] + [(1, j) for j in range(len(inst.dc.c2))]
    pts = [inst.dc.point(*r) for r in refs]
    colors = inst.coloring.c1 + inst.coloring.c2
    budget = SearchBudget(args.node_limit, args.time_limit)
    if args.graph:
        g = S.graph_from_dict(_read_json(args.graph))
        res = brute_force_embed(g.n, g.edges, g.colors, pts, colors, budget)
        witness = S.embedding_to_dict(S.Embedding(tuple(refs[i] for i in res.witness)))["map"] if res.witness else None
    else:
        res = brute_force_nhap(pts, colors, budget)
        witness = S.path_to_dict(S.PathEmbedding(tuple(refs[i] for i in res.witness)))["order"] if res.witness else None
    _write(S.dumps({"status": res.status, "witness": witness, "nodes": res.nodes}), args.out)
    return EXIT_INCONCLUSIVE if res.status == "inconclusive" else EXIT_OK


def cmd_verify(args) -> int:
    inst = _instance(args)
    dc, col = inst.dc, inst.coloring
    out: dict[str, Any] = {}
    if args.path:
        path = S.path_from_dict(_read_json(args.path))
        rep = validate_path(dc, col, path) if dc.n <= GEOMETRIC_CERTIFY_LIMIT else certify_path(dc, col, path)
        out["path"] = {"ok": rep.ok, "violation": rep.violation}
    if args.embedding:
        if not args.graph:
            raise PreconditionError("--embedding needs --graph")
        g = S.graph_from_dict(_read_json(args.graph))
        rep = validate_embedding(dc, col, g, S.embedding_from_dict(_read_json(args.embedding)))
        out["embedding"] = {"ok": rep.ok, "violation": rep.violation}
    if args.graph and not args.embedding:
        chk = is_forest_of_caterpillars(S.graph_from_dict(_read_json(args.graph)))
        out["caterpillar_forest"] = {"ok": chk.ok, "cycle": chk.cycle, "subdivided_star": chk.subdivided_star}
    if args.hedgehogs is not None:
        cid = CHAIN_IDS.index(args.chain)
        stats = compute_stats(dc, col)
        major = stats.major_c1 if cid == 0 else ("W" if stats.major_c1 == "B" else "B")
        flags = [c == major for c in col.chain(cid)]
        try:
            cover = cover_with_k_bodies(flags, args.hedgehogs, cid)
        except ValueError as exc:
            raise PreconditionError(str(exc)) from exc
        try:
            hs = realize_hedgehogs(flags, cover)
        except InfeasibleCoverError as exc:
            raise InvariantError(str(exc)) from exc
        out["hedgehogs"] = {
            "chain": args.chain,
            "major": major,
            "bodies": [{"lo": b.lo, "hi": b.hi, "head": b.has_head, "tail": b.has_tail} for b in cover.bodies],
            "paths": [list(h.path) for h in hs],
        }
    _write(S.dumps(out), args.out)
    failed = any(isinstance(v, dict) and v.get("ok") is False for k, v in out.items() if k != "caterpillar_forest")
    return EXIT_INVARIANT if failed else EXIT_OK


def cmd_render(args) -> int:
    inst = S.instance_from_dict(_read_json(args.instance))
    edges: list = []
    if args.path:
        edges = path_edges(S.path_from_dict(_read_json(args.path)).order)
    elif args.embedding:
        if not args.graph:
            raise PreconditionError("--embedding needs --graph")
        g = S.graph_from_dict(_read_json(args.graph))
        edges = graph_edges(S.embedding_from_dict(_read_json(args.embedding)).map, g.edges)
    _write(render_svg(inst.dc, inst.coloring, edges), args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg = SweepConfig(args.suite, max_n=args.max_n, max_side=args.max_side, oracle=not args.no_oracle,
                      node_limit=args.node_limit, fault=args.inject_fault, jobs=args.jobs, seed=args.seed)
    report = run_sweep(cfg)
    _write(json.dumps(report, indent=1) + "\n", args.out)
    return EXIT_OK if report["mismatches"] == 0 else EXIT_INVARIANT


def cmd_bench(args) -> int:
    report = run_bench(args.sizes, args.fractions, args.repeats, args.seed)
    if args.tsv:
        write_tsv(report, args.tsv)
    if args.figure:
        plot(report, args.figure)
    _write(json.dumps(report, indent=1) + "\n", args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dchain", description="Embeddings of 2-colored graphs on double-chains.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add(name: str, func, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--out", help="output file (default: stdout)")
        sp.set_defaults(func=func)
        return sp

    g = add("gen", cmd_gen, "generate a colored double-chain instance")
    g.add_argument("--n1", type=int, required=True)
    g.add_argument("--n2", type=int, required=True)
    g.add_argument("--coloring", default="random-equitable",
                   choices=("random-equitable", "periodic16", "explicit", "monochromatic-chains"))
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--c1")
    g.add_argument("--c2")

    for name, func, needs_graph in (("embed-path", cmd_embed_path, False),
                                    ("embed-caterpillar", cmd_embed_caterpillar, True),
                                    ("embed-stars", cmd_embed_stars, True)):
        e = add(name, func, f"{name.replace('-', ' ')} onto an instance")
        e.add_argument("--instance", help="instance JSON (default: stdin)")
        if needs_graph:
            e.add_argument("--graph", required=True, help="graph JSON")
        e.add_argument("--certify", action="store_true", help="validate the result before writing it")
        e.add_argument("--svg", help="also write an SVG drawing")

    o = add("oracle", cmd_oracle, "exhaustive search for a path or graph embedding")
    o.add_argument("--instance")
    o.add_argument("--graph", help="graph JSON; without it, search for an alternating path")
    o.add_argument("--node-limit", type=int, default=10_000_000)
    o.add_argument("--time-limit", type=float, default=60.0)

    v = add("verify", cmd_verify, "validate paths/embeddings, test graphs, dump hedgehog covers")
    v.add_argument("--instance")
    v.add_argument("--path")
    v.add_argument("--graph")
    v.add_argument("--embedding")
    v.add_argument("--hedgehogs", type=int, metavar="K", help="dump a cover of one chain by K hedgehogs")
    v.add_argument("--chain", choices=CHAIN_IDS, default="c1")

    r = add("render", cmd_render, "draw an instance and optional path/embedding as SVG")
    r.add_argument("--instance")
    r.add_argument("--path")
    r.add_argument("--graph")
    r.add_argument("--embedding")

    s = add("sweep", cmd_sweep, "run an exhaustive small-n suite")
    s.add_argument("--suite", choices=SUITES, required=True)
    s.add_argument("--max-n", type=int, default=10)
    s.add_argument("--max-side", type=int, default=5)
    s.add_argument("--no-oracle", action="store_true")
    s.add_argument("--node-limit", type=int, default=2_000_000)
    s.add_argument("--inject-fault", choices=FAULTS)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)

    b = add("bench", cmd_bench, "time the path construction over a size ladder")
    b.add_argument("--sizes", type=int, nargs="+", default=list(DEFAULT_SIZES))
    b.add_argument("--fractions", type=float, nargs="+", default=list(DEFAULT_FRACTIONS))
    b.add_argument("--repeats", type=int, default=3)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--tsv", help="write a TSV table")
    b.add_argument("--figure", help="write a PNG plot")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; keep 2 for invariant failures
        return EXIT_OK if exc.code in (0, None) else EXIT_PRECONDITION
    try:
        return args.func(args)
    except InvariantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (PreconditionError, ValueError, KeyError, CoordinateOverflowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
