"""Deterministic SVG drawings of double-chain embeddings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from dchain.chains import Coloring, DoubleChain
from dchain.geometry import Point


@dataclass(frozen=True)
class RenderStyle:
    width: float = 800.0
    height: float = 600.0
    margin: float = 20.0
    radius: float = 4.0
    black: str = "#111111"
    white: str = "#ffffff"
    outline: str = "#111111"
    stroke: str = "#3465a4"
    stroke_width: float = 1.5


@dataclass(frozen=True)
class Viewport:
    """x -> margin + sx*(x - x0), y -> margin + sy*(y1 - y) with sx, sy > 0.

    Positive per-axis scaling keeps every orientation sign; the y flip only
    undoes SVG's downward y axis, so the picture is not mirrored.
    """

    x0: int
    y1: int
    sx: float
    sy: float
    margin: float

    def __call__(self, p: Point) -> tuple[float, float]:
        return (self.margin + self.sx * (p.x - self.x0), self.margin + self.sy * (self.y1 - p.y))


def viewport(points: Sequence[Point], style: RenderStyle) -> Viewport:
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    inner_w = style.width - 2 * style.margin
    inner_h = style.height - 2 * style.margin
    return Viewport(min(xs), max(ys), inner_w / max(max(xs) - min(xs), 1),
                    inner_h / max(max(ys) - min(ys), 1), style.margin)


def _f(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(dc: DoubleChain, col: Coloring | None = None,
               edges: Sequence[tuple[tuple[int, int], tuple[int, int]]] = (),
               style: RenderStyle | None = None) -> str:
    """SVG with one circle per point and one line per edge.

    Edges are pairs of (chain, position) references.
    """
    style = style or RenderStyle()
    pts = list(dc.c1.points) + list(dc.c2.points)
    vp = viewport(pts, style)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(style.width)}" height="{_f(style.height)}" '
        f'viewBox="0 0 {_f(style.width)} {_f(style.height)}">',
        f'<g stroke="{style.stroke}" stroke-width="{_f(style.stroke_width)}">',
    ]
    for a, b in edges:
        (x1, y1), (x2, y2) = vp(dc.point(*a)), vp(dc.point(*b))
        lines.append(f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}"/>')
    lines.append("</g>")
    lines.append(f'<g stroke="{style.outline}" stroke-width="1">')
    for cid in (0, 1):
        for pos, p in enumerate(dc.chain(cid).points):
            cx, cy = vp(p)
            c = col.color(cid, pos) if col is not None else "B"
            fill = style.black if c == "B" else style.white
            lines.append(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(style.radius)}" fill="{fill}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def path_edges(order: Sequence[tuple[int, int]]) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    return [(order[i], order[i + 1]) for i in range(len(order) - 1)]


def graph_edges(mapping: Sequence[tuple[int, int]], edges: Sequence[tuple[int, int]]):
    return [(mapping[u], mapping[v]) for u, v in edges]
