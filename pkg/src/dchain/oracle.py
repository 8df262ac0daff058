"""Exhaustive search on small point sets, used to cross-check constructions."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

from dchain.geometry import Point, in_general_position, segments_properly_cross

Status = Literal["found", "none", "inconclusive"]


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int = 10_000_000
    time_limit: float = 60.0


@dataclass(frozen=True)
class OracleResult:
    status: Status
    witness: tuple[int, ...] | None
    nodes: int


class _OutOfBudget(Exception):
    pass


class _Counter:
    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.deadline = time.monotonic() + budget.time_limit

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            raise _OutOfBudget
        if self.nodes & 0xFFF == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget


def _prepare(points: Sequence[Sequence[int]], colors: str) -> list[Point]:
    if len(points) != len(colors):
        raise ValueError("one color per point")
    pts = [Point(int(p[0]), int(p[1])) for p in points]
    if not in_general_position(pts):
        raise ValueError("points are not in general position")
    return pts


def _crossing_lists(pts: list[Point], colors: str) -> tuple[list[list[int]], list[list[list[int]]]]:
    """Ids of the bichromatic segments and, per segment, the ids it crosses."""
    n = len(pts)
    seg_id = [[-1] * n for _ in range(n)]
    segs: list[tuple[int, int]] = []
    for i in range(n):
        for j in range(i + 1, n):
            if colors[i] != colors[j]:
                seg_id[i][j] = seg_id[j][i] = len(segs)
                segs.append((i, j))
    crosses: list[list[int]] = [[] for _ in segs]
    for a in range(len(segs)):
        i, j = segs[a]
        for b in range(a + 1, len(segs)):
            k, l = segs[b]
            if len({i, j, k, l}) == 4 and segments_properly_cross((pts[i], pts[j]), (pts[k], pts[l])):
                crosses[a].append(b)
                crosses[b].append(a)
    return seg_id, crosses  # type: ignore[return-value]


def brute_force_nhap(points: Sequence[Sequence[int]], colors: str,
                     budget: SearchBudget | None = None) -> OracleResult:
    """Search for a non-crossing alternating Hamiltonian path.

    The witness lists point indices; paths are enumerated once per direction
    by requiring the first index to be smaller than the last.  Each drawn
    edge blocks the segments it crosses, so testing a candidate is O(1).
    """
    pts = _prepare(points, colors)
    n = len(pts)
    cnt = _Counter(budget or SearchBudget())
    nb = colors.count("B")
    if abs(2 * nb - n) > 1:
        return OracleResult("none", None, 0)
    if n == 1:
        return OracleResult("found", (0,), 1)
    seg_id, crosses = _crossing_lists(pts, colors)
    ends = [(0, 0)] * len(crosses)
    for i in range(n):
        for j in range(i + 1, n):
            if seg_id[i][j] >= 0:
                ends[seg_id[i][j]] = (i, j)
    blocked = [0] * len(crosses)
    used = [False] * n
    # live[u]: unblocked segments from u to unused points
    live = [sum(1 for e in seg_id[u] if e >= 0) for u in range(n)]
    order = sorted(range(n), key=lambda i: pts[i])
    starts = [c for c in "BW" if (n % 2 == 0) or colors.count(c) * 2 > n]
    path: list[int] = []

    def block(e: int, d: int) -> None:
        for f in crosses[e]:
            before = blocked[f]
            blocked[f] += d
            if (before == 0) != (blocked[f] == 0):
                i, j = ends[f]
                if not used[j]:
                    live[i] -= d
                if not used[i]:
                    live[j] -= d

    def mark(t: int, d: int) -> None:
        # d = +1 marks t used, -1 releases it
        used[t] = d > 0
        row = seg_id[t]
        for v in range(n):
            e = row[v]
            if e >= 0 and not blocked[e]:
                live[v] -= d

    def hopeless(last: int) -> bool:
        row = seg_id[last]
        single = 0
        for u in range(n):
            if used[u]:
                continue
            e = row[u]
            opts = live[u] + (1 if e >= 0 and not blocked[e] else 0)
            if opts == 0:
                return True
            if opts == 1:
                single += 1
                if single > 1:
                    return True
        return False

    def dfs() -> bool:
        cnt.tick()
        if len(path) == n:
            return path[0] < path[-1]
        last = path[-1]
        if hopeless(last):
            return False
        row = seg_id[last]
        for t in order:
            e = row[t]
            if used[t] or e < 0 or blocked[e]:
                continue
            block(e, 1)
            mark(t, 1)
            path.append(t)
            if dfs():
                return True
            path.pop()
            mark(t, -1)
            block(e, -1)
        return False

    try:
        for s in order:
            if colors[s] not in starts:
                continue
            mark(s, 1)
            path.append(s)
            if dfs():
                return OracleResult("found", tuple(path), cnt.nodes)
            path.pop()
            mark(s, -1)
    except _OutOfBudget:
        return OracleResult("inconclusive", None, cnt.nodes)
    return OracleResult("none", None, cnt.nodes)


def _spine_first(n: int, adj: list[list[int]]) -> list[int] | None:
    """Central path in path order, then each spine vertex's leaves; None
    unless the graph is a caterpillar tree."""
    if n <= 2 or sum(map(len, adj)) != 2 * (n - 1):
        return None
    inner = [v for v in range(n) if len(adj[v]) >= 2]
    inner_set = set(inner)
    ends = [v for v in inner if sum(x in inner_set for x in adj[v]) <= 1]
    if not ends:
        return None
    spine, prev = [ends[0]], -1
    while True:
        nxt = [x for x in adj[spine[-1]] if x in inner_set and x != prev]
        if len(nxt) != 1:
            break
        prev = spine[-1]
        spine.append(nxt[0])
    if len(spine) != len(inner) or len(nxt) > 1:
        return None
    order = list(spine)
    for v in spine:
        order.extend(x for x in adj[v] if x not in inner_set)
    return order if len(order) == n else None


def _vertex_order(n: int, adj: list[list[int]]) -> list[int]:
    spine = _spine_first(n, adj)
    if spine is not None:
        return spine
    # BFS so that most vertices have a placed neighbor when tried
    seen = [False] * n
    out: list[int] = []
    for root in sorted(range(n), key=lambda v: -len(adj[v])):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        for v in queue:
            out.append(v)
            for x in sorted(adj[v], key=lambda x: -len(adj[x])):
                if not seen[x]:
                    seen[x] = True
                    queue.append(x)
    return out


def brute_force_embed(n: int, edges: Sequence[tuple[int, int]], vertex_colors: str,
                      points: Sequence[Sequence[int]], point_colors: str,
                      budget: SearchBudget | None = None) -> OracleResult:
    """Search for a color-preserving straight-line non-crossing embedding.

    Caterpillars are placed spine first, other graphs in BFS order.  The
    witness maps vertex ``v`` to point index ``witness[v]``.
    """
    pts = _prepare(points, point_colors)
    if len(pts) != n or len(vertex_colors) != n:
        raise ValueError("need one point and one color per vertex")
    if sorted(vertex_colors) != sorted(point_colors):
        return OracleResult("none", None, 0)
    cnt = _Counter(budget or SearchBudget())
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    order = _vertex_order(n, adj)
    where = [-1] * n
    taken = [False] * n
    drawn: list[tuple[Point, Point]] = []

    def place(k: int) -> bool:
        cnt.tick()
        if k == n:
            return True
        v = order[k]
        for p in range(n):
            if taken[p] or point_colors[p] != vertex_colors[v]:
                continue
            new = [(pts[p], pts[where[u]]) for u in adj[v] if where[u] >= 0]
            if any(segments_properly_cross(e, f) for e in new for f in drawn):
                continue
            where[v] = p
            taken[p] = True
            drawn.extend(new)
            if place(k + 1):
                return True
            del drawn[len(drawn) - len(new):]
            taken[p] = False
            where[v] = -1
        return False

    try:
        if place(0):
            return OracleResult("found", tuple(where), cnt.nodes)
    except _OutOfBudget:
        return OracleResult("inconclusive", None, cnt.nodes)
    return OracleResult("none", None, cnt.nodes)


def enumerate_equitable_colorings(n: int) -> Iterator[str]:
    """All B/W strings of length n with color counts differing by at most one,
    in lexicographic order."""
    for word in itertools.product("BW", repeat=n):
        if abs(2 * word.count("B") - n) <= 1:
            yield "".join(word)
