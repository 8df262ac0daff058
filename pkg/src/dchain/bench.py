"""Timing ladder for the path construction."""

from __future__ import annotations

import gc
import random
import time
from typing import Sequence

from dchain.chains import Coloring
from dchain.nhap import embed_nhap

DEFAULT_SIZES = (10_000, 20_000, 40_000, 80_000, 100_000)
DEFAULT_FRACTIONS = (0.2, 0.5, 0.8)


def random_equitable(n1: int, n2: int, rng: random.Random) -> Coloring:
    n = n1 + n2
    blacks = n // 2 + (rng.random() < 0.5) * (n % 2)
    s = ["B"] * blacks + ["W"] * (n - blacks)
    rng.shuffle(s)
    return Coloring("".join(s[:n1]), "".join(s[n1:]))


def time_embed(n1: int, n2: int, col: Coloring, repeats: int = 3) -> float:
    """Best wall time of ``repeats`` runs, garbage collector paused."""
    best = float("inf")
    enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        for _ in range(repeats):
            t = time.perf_counter()
            embed_nhap((n1, n2), col)
            best = min(best, time.perf_counter() - t)
    finally:
        if enabled:
            gc.enable()
    return best


def run_bench(sizes: Sequence[int] = DEFAULT_SIZES, fractions: Sequence[float] = DEFAULT_FRACTIONS,
              repeats: int = 3, seed: int = 0) -> dict:
    rng = random.Random(seed)
    rows = []
    for frac in fractions:
        for n in sizes:
            n1 = max(1, round(n * frac))
            col = random_equitable(n1, n - n1, rng)
            rows.append({"n": n, "fraction": frac, "n1": n1, "n2": n - n1,
                         "seconds": time_embed(n1, n - n1, col, repeats)})
    ratios = []
    for frac in fractions:
        by_n = {r["n"]: r["seconds"] for r in rows if r["fraction"] == frac}
        for n in sizes:
            if 2 * n in by_n:
                ratios.append({"fraction": frac, "n": n, "ratio": by_n[2 * n] / by_n[n]})
    return {"seed": seed, "repeats": repeats, "rows": rows, "ratios": ratios}


def write_tsv(report: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("n\tfraction\tn1\tn2\tseconds\n")
        for r in report["rows"]:
            fh.write(f"{r['n']}\t{r['fraction']}\t{r['n1']}\t{r['n2']}\t{r['seconds']:.6f}\n")


def plot(report: dict, path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4), dpi=100)
    for frac in sorted({r["fraction"] for r in report["rows"]}):
        pts = sorted((r["n"], r["seconds"]) for r in report["rows"] if r["fraction"] == frac)
        ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o", label=f"|C1|/n = {frac}")
    ax.set_xlabel("points n")
    ax.set_ylabel("seconds (best of repeats)")
    ax.set_title("path construction time")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
