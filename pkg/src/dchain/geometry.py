"""Exact integer predicates for points and segments in the plane."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

COORD_LIMIT = 2**62


class CoordinateOverflowError(ValueError):
    pass


class Point(NamedTuple):
    x: int
    y: int


class Segment(NamedTuple):
    a: Point
    b: Point

    @classmethod
    def of(cls, a: Sequence[int], b: Sequence[int]) -> "Segment":
        pa, pb = Point(*a), Point(*b)
        if pa == pb:
            raise ValueError(f"degenerate segment at {pa}")
        return cls(pa, pb)


def check_bounds(*points: Sequence[int]) -> None:
    for p in points:
        if abs(p[0]) > COORD_LIMIT or abs(p[1]) > COORD_LIMIT:
            raise CoordinateOverflowError(f"coordinate out of range: {tuple(p)}")


def orient_raw(p: Sequence[int], q: Sequence[int], r: Sequence[int]) -> int:
    """Signed doubled area of (p, q, r); positive for a counterclockwise turn."""
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def orientation(p: Sequence[int], q: Sequence[int], r: Sequence[int]) -> int:
    check_bounds(p, q, r)
    d = orient_raw(p, q, r)
    return (d > 0) - (d < 0)


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def _on_closed_box(p, q, r) -> bool:
    # r collinear with pq; is r within the bounding box of pq
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def segments_properly_cross(s: Sequence[Sequence[int]], t: Sequence[Sequence[int]]) -> bool:
    """True iff the open interiors of ``s`` and ``t`` meet.

    Collinear segments overlapping in more than a point count as crossing.
    """
    a, b = s
    c, d = t
    o1 = _sign(orient_raw(a, b, c))
    o2 = _sign(orient_raw(a, b, d))
    o3 = _sign(orient_raw(c, d, a))
    o4 = _sign(orient_raw(c, d, b))
    if o1 == o2 == o3 == o4 == 0:
        return _collinear_overlap(a, b, c, d)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return False


def _collinear_overlap(a, b, c, d) -> bool:
    # project onto the dominant axis; positive-length overlap only
    axis = 0 if a[0] != b[0] else 1
    lo1, hi1 = sorted((a[axis], b[axis]))
    lo2, hi2 = sorted((c[axis], d[axis]))
    return min(hi1, hi2) > max(lo1, lo2)


def point_in_open_segment(p: Sequence[int], s: Sequence[Sequence[int]]) -> bool:
    a, b = s
    if tuple(p) == tuple(a) or tuple(p) == tuple(b):
        return False
    return orient_raw(a, b, p) == 0 and _on_closed_box(a, b, p)


def segments_conflict(s: Sequence[Sequence[int]], t: Sequence[Sequence[int]]) -> bool:
    """Proper crossing, or an endpoint of one segment inside the other.

    This is the test used for drawings: two edges of a straight-line drawing
    may only meet at a shared endpoint.
    """
    if segments_properly_cross(s, t):
        return True
    return any(point_in_open_segment(p, t) for p in s) or any(point_in_open_segment(p, s) for p in t)


def path_is_noncrossing(points: Sequence[Sequence[int]]) -> bool:
    """Check a polyline for edge crossings and vertices lying on other edges.

    Quadratic in the number of edges.
    """
    pts = [tuple(p) for p in points]
    edges = [(pts[i], pts[i + 1]) for i in range(len(pts) - 1)]
    for e in edges:
        if e[0] == e[1]:
            return False
    return edges_noncrossing(edges)


def edges_noncrossing(edges: Iterable[Sequence[Sequence[int]]]) -> bool:
    """Pairwise check of a set of straight-line edges (any graph)."""
    edges = [(tuple(a), tuple(b)) for a, b in edges]
    for e, f in combinations(edges, 2):
        if segments_conflict(e, f):
            return False
    return True


def in_general_position(points: Sequence[Sequence[int]]) -> bool:
    """No three points collinear and no repeated points.  Cubic."""
    pts = [tuple(p) for p in points]
    if len(set(pts)) != len(pts):
        return False
    for p, q, r in combinations(pts, 3):
        if orient_raw(p, q, r) == 0:
            return False
    return True


def convex_hull(points: Sequence[Sequence[int]]) -> list[int]:
    """Indices of the strict convex hull vertices in counterclockwise order."""
    order = sorted(range(len(points)), key=lambda i: (points[i][0], points[i][1]))
    if len(order) <= 2:
        return order

    def half(seq):
        out: list[int] = []
        for i in seq:
            while len(out) >= 2 and orient_raw(points[out[-2]], points[out[-1]], points[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = half(order)
    upper = half(reversed(order))
    return lower[:-1] + upper[:-1]
